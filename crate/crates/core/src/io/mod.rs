//! Workload files, built-in reference cases, reports and Gantt charts.

mod cases;
mod gantt;
mod report;
mod workload;

pub use cases::{builtin_case, reference_results, ReferenceRow, CASE_COUNT, REFERENCE_QUANTUM};
pub use gantt::render_gantt;
pub use report::{emit_report, ExactValue, ProcessRow, Report, ReportFormat};
pub use workload::{emit_workload, parse_workload, WorkloadFormat};
