use serde::{Deserialize, Serialize};

use crate::scalars::display::pretty;

use super::{Centre, CentreCharacter};

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn subscript(i: usize) -> String {
    i.to_string().chars().map(|c| SUBSCRIPTS[c.to_digit(10).unwrap() as usize]).collect()
}

/// "χ₀+χ₁+2χ₃" (or "x0+x1+2x3"); the empty sum is "0".
pub fn decomposition_string(mult: &[u64], ascii: bool) -> String {
    let terms: Vec<String> = mult
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(i, &m)| {
            let name = if ascii { format!("x{i}") } else { format!("χ{}", subscript(i)) };
            if m == 1 {
                name
            } else {
                format!("{m}{name}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RowJson {
    pub label: String,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CentreTableJson {
    #[serde(rename = "N")]
    pub n: u64,
    pub pairs: Vec<[String; 2]>,
    pub rows: Vec<RowJson>,
}

impl Centre {
    pub fn pair_names(&self) -> Vec<String> {
        let g = self.group();
        self.display_pairs().iter().map(|&(f, x)| format!("({},{})", g.name(f), g.name(x))).collect()
    }

    pub fn row_strings(&self, chi: &CentreCharacter, ascii: bool) -> Vec<String> {
        self.display_pairs().iter().map(|&(f, x)| pretty(&chi.get(f, x), ascii)).collect()
    }

    /// A table with one row per character, labelled by `names`.
    pub fn table_json(&self, rows: &[(String, &CentreCharacter)], ascii: bool) -> CentreTableJson {
        let g = self.group();
        let n = rows.iter().map(|(_, c)| c.root_order()).fold(1, num_integer::lcm);
        CentreTableJson {
            n,
            pairs: self.display_pairs().iter().map(|&(f, x)| [g.name(f).to_string(), g.name(x).to_string()]).collect(),
            rows: rows.iter().map(|(l, c)| RowJson { label: l.clone(), values: self.row_strings(c, ascii) }).collect(),
        }
    }

    /// Aligned plain-text table.
    pub fn table_text(&self, rows: &[(String, &CentreCharacter)], ascii: bool) -> String {
        let header = self.pair_names();
        let body: Vec<(String, Vec<String>)> =
            rows.iter().map(|(l, c)| (l.clone(), self.row_strings(c, ascii))).collect();
        let width = |s: &str| s.chars().count();
        let lw = body.iter().map(|(l, _)| width(l)).max().unwrap_or(0);
        let mut cw: Vec<usize> = header.iter().map(|h| width(h)).collect();
        for (_, r) in &body {
            for (w, v) in cw.iter_mut().zip(r) {
                *w = (*w).max(width(v));
            }
        }
        let pad = |s: &str, w: usize| format!("{}{}", " ".repeat(w - width(s)), s);
        let mut out = String::new();
        out.push_str(&" ".repeat(lw));
        out.push_str(" |");
        for (h, w) in header.iter().zip(&cw) {
            out.push(' ');
            out.push_str(&pad(h, *w));
        }
        out.push('\n');
        out.push_str(&"-".repeat(lw + 1));
        out.push('+');
        out.push_str(&"-".repeat(cw.iter().map(|w| w + 1).sum()));
        out.push('\n');
        for (l, r) in &body {
            out.push_str(&pad(l, lw));
            out.push_str(" |");
            for (v, w) in r.iter().zip(&cw) {
                out.push(' ');
                out.push_str(&pad(v, *w));
            }
            out.push('\n');
        }
        out
    }

    pub fn table_csv(&self, rows: &[(String, &CentreCharacter)], ascii: bool) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::from("label");
        for h in self.pair_names() {
            out.push(',');
            out.push_str(&quote(&h));
        }
        out.push('\n');
        for (l, c) in rows {
            out.push_str(&quote(l));
            for v in self.row_strings(c, ascii) {
                out.push(',');
                out.push_str(&quote(&v));
            }
            out.push('\n');
        }
        out
    }

    /// Row labels χ₀, χ₁, … for the simples.
    pub fn simple_names(&self, ascii: bool) -> Vec<String> {
        (0..self.simple_objects().len())
            .map(|i| if ascii { format!("x{i}") } else { format!("χ{}", subscript(i)) })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_strings() {
        assert_eq!(decomposition_string(&[1, 1, 2, 0], false), "χ₀+χ₁+2χ₂");
        assert_eq!(decomposition_string(&[1, 0, 1, 0, 0, 0, 1], true), "x0+x2+x6");
        assert_eq!(decomposition_string(&[0, 0], true), "0");
        assert_eq!(subscript(12), "₁₂");
    }
}
