//! ASCII bar diagrams: one column of `[ ]` cells per part, bottom-aligned.

use complab::Composition;

const CELL: &str = "[ ]";
const BLANK: &str = "   ";
const GAP: &str = "    ";
const ARROW: &str = " -> ";

/// Rows of the diagram for `c`, top first, each padded to full width.
pub fn bars(c: &Composition) -> Vec<String> {
    let height = c.parts().iter().copied().max().unwrap_or(0);
    (0..height)
        .rev()
        .map(|level| {
            c.parts()
                .iter()
                .map(|&p| if p > level { CELL } else { BLANK })
                .collect()
        })
        .collect()
}

fn caption(c: &Composition) -> String {
    let parts: Vec<String> = c.parts().iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

/// The diagram of `c`, and of `image` to its right when given, with a
/// caption line underneath.
pub fn render(c: &Composition, image: Option<&Composition>) -> String {
    let mut panels = vec![bars(c)];
    let mut captions = vec![caption(c)];
    if let Some(img) = image {
        panels.push(bars(img));
        captions.push(caption(img));
    }
    let height = panels.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = panels
        .iter()
        .map(|p| p.first().map_or(0, String::len))
        .collect();
    let mut out = String::new();
    for row in 0..height {
        let mut line = String::new();
        for (i, panel) in panels.iter().enumerate() {
            if i > 0 {
                line.push_str(if row + 1 == height { ARROW } else { GAP });
            }
            // shorter panels are padded at the top so baselines line up
            let offset = height - panel.len();
            match row.checked_sub(offset) {
                Some(r) => line.push_str(&panel[r]),
                None => line.push_str(&" ".repeat(widths[i])),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&captions.join(" -> "));
    out.push('\n');
    out
}
