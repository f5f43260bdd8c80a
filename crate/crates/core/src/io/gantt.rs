use crate::schedule::Schedule;

/// Renders the schedule as a one-line text Gantt chart with tick labels on a
/// second line.
///
/// Each segment becomes a cell `|pid   ` whose width is proportional to its
/// duration (at least one fill column); a closing `|` ends the bar. Neither
/// line is wider than `width`. If `width` cannot fit `2 * segments + 1`
/// columns, labels and pids are dropped and every segment is a bare `|`
/// cell, so the cell count always equals the segment count.
pub fn render_gantt(schedule: &Schedule, width: usize) -> String {
    let segs = &schedule.segments;
    let n = segs.len();
    if n == 0 {
        return String::new();
    }
    if width < 2 * n + 1 {
        return "|".repeat(n + 1);
    }

    let total: u64 = segs.iter().map(|s| s.len()).sum();
    let extra = (width - 1 - 2 * n) as u64;
    let mut bar = String::with_capacity(width);
    let mut cols = Vec::with_capacity(n + 1);
    for s in segs {
        let fill = 1 + (s.len() * extra / total.max(1)) as usize;
        cols.push(bar.chars().count());
        bar.push('|');
        let mut name: String = s.pid.as_str().chars().take(fill).collect();
        let pad = fill - name.chars().count();
        name.extend(std::iter::repeat_n(' ', pad));
        bar.push_str(&name);
    }
    cols.push(bar.chars().count());
    bar.push('|');

    let mut labels: Vec<char> = vec![' '; width];
    let end_label = segs[n - 1].end.to_string();
    let end_start = cols[n].min(width.saturating_sub(end_label.len()));
    let mut next_free = 0;
    for (s, &col) in segs.iter().zip(&cols) {
        let text = s.start.to_string();
        if col >= next_free && col + text.len() < end_start {
            for (i, ch) in text.chars().enumerate() {
                labels[col + i] = ch;
            }
            next_free = col + text.len() + 1;
        }
    }
    for (i, ch) in end_label.chars().enumerate() {
        if end_start + i < width {
            labels[end_start + i] = ch;
        }
    }
    let labels: String = labels.into_iter().collect();
    format!("{bar}\n{}", labels.trim_end())
}
