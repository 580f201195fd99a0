//! ASCII and SVG bump diagrams. B-arcs are solid blue, C-arcs dashed red.

use std::fmt::Write;
use std::str::FromStr;

use vpro_core::{bump_diagram, generalized_bump_diagram, KrewerasWord, Letter, PStrictLabeling, PartialMultiKrewerasWord};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagrammable {
    Kreweras(KrewerasWord),
    Multi(PartialMultiKrewerasWord),
}

impl From<KrewerasWord> for Diagrammable {
    fn from(w: KrewerasWord) -> Self {
        Diagrammable::Kreweras(w)
    }
}

impl From<PartialMultiKrewerasWord> for Diagrammable {
    fn from(w: PartialMultiKrewerasWord) -> Self {
        Diagrammable::Multi(w)
    }
}

/// Accepts word JSON, labeling JSON, the `|`-separated block form, or a
/// plain Kreweras word.
pub fn parse_input(text: &str) -> Result<Diagrammable> {
    let t = text.trim();
    if t.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(t).map_err(|e| Error::Input(e.to_string()))?;
        let parsed = if value.get("blocks").is_some() {
            serde_json::from_value::<PartialMultiKrewerasWord>(value).map(Diagrammable::Multi)
        } else {
            serde_json::from_value::<PStrictLabeling>(value)
                .map(|f| Diagrammable::Multi(vpro_core::word_of_labeling(&f)))
        };
        return parsed.map_err(|e| Error::Input(e.to_string()));
    }
    if t.contains('|') || t.contains('∅') {
        return Ok(Diagrammable::Multi(t.parse()?));
    }
    Ok(Diagrammable::Kreweras(t.parse()?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Color {
    B,
    C,
}

/// Columns grouped into blocks, plus arcs between column indices.
struct Layout {
    /// Per block: its letters (empty for an empty block).
    blocks: Vec<Vec<Letter>>,
    separators: bool,
    /// `(opener column, closer column, color)`, sorted.
    arcs: Vec<(usize, usize, Color)>,
    /// Columns of A's carrying a double arc.
    doubles: Vec<usize>,
}

impl Layout {
    fn of(input: &Diagrammable) -> Layout {
        match input {
            Diagrammable::Kreweras(w) => {
                let d = bump_diagram(w);
                let mut arcs: Vec<_> = d
                    .arcs_b
                    .iter()
                    .map(|&(i, j)| (i - 1, j - 1, Color::B))
                    .chain(d.arcs_c.iter().map(|&(i, j)| (i - 1, j - 1, Color::C)))
                    .collect();
                arcs.sort_by_key(|&(i, j, c)| (c as u8, i, j));
                Layout {
                    blocks: w.letters().iter().map(|&l| vec![l]).collect(),
                    separators: false,
                    arcs,
                    doubles: vec![],
                }
            }
            Diagrammable::Multi(w) => {
                let d = generalized_bump_diagram(w);
                let slots = d.positions();
                let mut blocks = vec![Vec::new(); w.q()];
                let mut a_col = vec![0; d.ell()];
                let mut closers = Vec::new();
                for (col, s) in slots.iter().enumerate() {
                    blocks[s.block - 1].push(s.letter);
                    match s.letter {
                        Letter::A => a_col[s.a_index] = col,
                        Letter::B => closers.push((s.a_index, col, Color::B)),
                        Letter::C => closers.push((s.a_index, col, Color::C)),
                    }
                }
                let mut arcs: Vec<_> = closers.into_iter().map(|(a, col, c)| (a_col[a], col, c)).collect();
                arcs.sort_by_key(|&(i, j, c)| (c as u8, i, j));
                let doubles = d.double_arc_indices().into_iter().map(|i| a_col[i]).collect();
                Layout {
                    blocks,
                    separators: true,
                    arcs,
                    doubles,
                }
            }
        }
    }

    /// Character offset of every column and of every block start, and the
    /// total width.
    fn columns(&self) -> (Vec<usize>, Vec<usize>, usize) {
        let gap = if self.separators { 2 } else { 0 };
        let step = if self.separators {
            2
        } else {
            2.max(self.blocks.len().to_string().len() + 1)
        };
        let mut x = 0;
        let mut cols = Vec::new();
        let mut starts = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                x += gap;
            }
            starts.push(x);
            if block.is_empty() {
                x += step;
            }
            for _ in block {
                cols.push(x);
                x += step;
            }
        }
        (cols, starts, x)
    }
}

const MARGIN: usize = 3;

fn put(row: &mut Vec<char>, at: usize, s: &str) {
    for (k, ch) in s.chars().enumerate() {
        if row.len() <= at + k {
            row.resize(at + k + 1, ' ');
        }
        row[at + k] = ch;
    }
}

fn finish(row: Vec<char>) -> String {
    let s: String = row.into_iter().collect();
    s.trim_end().to_string()
}

pub fn render_ascii(input: &Diagrammable) -> String {
    let layout = Layout::of(input);
    let (cols, starts, _) = layout.columns();
    let mut out = String::new();
    let mut index_row = Vec::new();
    let mut letter_row = Vec::new();
    for (b, block) in layout.blocks.iter().enumerate() {
        put(&mut index_row, MARGIN + starts[b], &(b + 1).to_string());
        if layout.separators && b > 0 {
            put(&mut letter_row, MARGIN + starts[b] - 2, "|");
        }
        if block.is_empty() {
            put(&mut letter_row, MARGIN + starts[b], "∅");
        }
    }
    let mut col = 0;
    for block in &layout.blocks {
        for l in block {
            put(&mut letter_row, MARGIN + cols[col], &l.to_string());
            col += 1;
        }
    }
    writeln!(out, "{}", finish(index_row)).unwrap();
    writeln!(out, "{}", finish(letter_row)).unwrap();
    for &(i, j, color) in &layout.arcs {
        let mut row = Vec::new();
        let (name, fill) = match color {
            Color::B => ("B", ['=', '=']),
            Color::C => ("C", ['-', ' ']),
        };
        put(&mut row, 0, name);
        let (x1, x2) = (MARGIN + cols[i], MARGIN + cols[j]);
        for x in x1 + 1..x2 {
            put(&mut row, x, &fill[(x - x1 - 1) % 2].to_string());
        }
        put(&mut row, x1, "+");
        put(&mut row, x2, "+");
        writeln!(out, "{}", finish(row)).unwrap();
    }
    for &c in &layout.doubles {
        let block = block_of_column(&layout, c);
        writeln!(out, "double arc from A in block {block}").unwrap();
    }
    out
}

fn block_of_column(layout: &Layout, col: usize) -> usize {
    let mut seen = 0;
    for (b, block) in layout.blocks.iter().enumerate() {
        seen += block.len();
        if col < seen {
            return b + 1;
        }
    }
    layout.blocks.len()
}

const UNIT: usize = 12;
const PAD: usize = 20;

pub fn render_svg(input: &Diagrammable) -> String {
    let layout = Layout::of(input);
    let (cols, starts, width_chars) = layout.columns();
    let x_of = |c: usize| PAD + c * UNIT + UNIT / 2;
    let max_span = layout.arcs.iter().map(|&(i, j, _)| cols[j] - cols[i]).max().unwrap_or(0);
    let arc_height = max_span * UNIT / 2;
    let baseline = PAD + arc_height + 10;
    let width = 2 * PAD + width_chars * UNIT;
    let height = baseline + 40;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="14">"#
    )
    .unwrap();
    for &(i, j, color) in &layout.arcs {
        let (x1, x2) = (x_of(cols[i]), x_of(cols[j]));
        let r = (x2 - x1) / 2;
        let (class, style) = match color {
            Color::B => ("arc-b", r#"stroke="blue""#),
            Color::C => ("arc-c", r#"stroke="red" stroke-dasharray="6 4""#),
        };
        writeln!(
            s,
            r#"  <path class="{class}" d="M {x1} {baseline} A {r} {r} 0 0 1 {x2} {baseline}" fill="none" stroke-width="2" {style}/>"#
        )
        .unwrap();
    }
    let mut col = 0;
    for (b, block) in layout.blocks.iter().enumerate() {
        let bx = x_of(starts[b]);
        writeln!(
            s,
            r#"  <text class="block-index" x="{bx}" y="{}" text-anchor="middle" fill="gray">{}</text>"#,
            baseline + 34,
            b + 1
        )
        .unwrap();
        if layout.separators && b > 0 {
            let sx = PAD + (starts[b] - 1) * UNIT;
            writeln!(
                s,
                r#"  <line class="separator" x1="{sx}" y1="{}" x2="{sx}" y2="{}" stroke="gray"/>"#,
                baseline - 4,
                baseline + 20
            )
            .unwrap();
        }
        if block.is_empty() {
            writeln!(
                s,
                r#"  <text class="empty" x="{bx}" y="{}" text-anchor="middle">∅</text>"#,
                baseline + 16
            )
            .unwrap();
        }
        for l in block {
            writeln!(
                s,
                r#"  <text class="letter" x="{}" y="{}" text-anchor="middle">{l}</text>"#,
                x_of(cols[col]),
                baseline + 16
            )
            .unwrap();
            col += 1;
        }
    }
    for &c in &layout.doubles {
        writeln!(
            s,
            r#"  <circle class="double-arc" cx="{}" cy="{baseline}" r="4" fill="purple"><title>double arc</title></circle>"#,
            x_of(cols[c])
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

pub fn render_diagram(input: &Diagrammable, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(input),
        RenderFormat::Svg => render_svg(input),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kw(s: &str) -> Diagrammable {
        Diagrammable::Kreweras(s.parse().unwrap())
    }

    #[test]
    fn abc_ascii() {
        let text = render_ascii(&kw("ABC"));
        assert_eq!(text, "   1 2 3\n   A B C\nB  +=+\nC  +- -+\n");
    }

    #[test]
    fn multi_ascii_has_blocks_and_doubles() {
        let w = parse_input("A|∅|BC").unwrap();
        let text = render_ascii(&w);
        assert_eq!(
            text,
            "   1   2   3\n   A | ∅ | B C\nB  +=======+\nC  +- - - - -+\ndouble arc from A in block 1\n"
        );
    }

    #[test]
    fn wide_indices_stay_apart() {
        let text = render_ascii(&kw("ACABBAABCCACBABCCB"));
        let first = text.lines().next().unwrap();
        assert!(first.ends_with(" 16 17 18"), "{first}");
    }

    #[test]
    fn parse_forms() {
        assert!(matches!(parse_input("ABC").unwrap(), Diagrammable::Kreweras(_)));
        assert!(matches!(parse_input("A|BC").unwrap(), Diagrammable::Multi(_)));
        let j = r#"{"ell":1,"q":3,"fibers":{"A":[1],"B":[2],"C":[2]}}"#;
        assert_eq!(parse_input(j).unwrap(), parse_input("A|BC|∅").unwrap());
        assert!(parse_input("AXC").is_err());
        assert!("png".parse::<RenderFormat>().is_err());
    }
}
