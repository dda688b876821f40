//! Collects results and prints them as plain text or tab-separated values.

use std::fmt::Display;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Debug)]
enum Item {
    Value(String),
    Kv(String, String),
    Note(String),
    Table(Vec<String>, Vec<Vec<String>>),
    Raw(String),
}

#[derive(Debug, Default)]
pub struct Report {
    items: Vec<Item>,
}

impl Report {
    /// A bare result such as a count.
    pub fn value(&mut self, v: impl Display) {
        self.items.push(Item::Value(v.to_string()));
    }

    pub fn kv(&mut self, key: &str, v: impl Display) {
        self.items.push(Item::Kv(key.to_string(), v.to_string()));
    }

    /// A remark printed as a `#` comment.
    pub fn note(&mut self, s: &str) {
        self.items.push(Item::Note(s.to_string()));
    }

    pub fn table(&mut self, header: &[&str], rows: Vec<Vec<String>>) {
        self.items.push(Item::Table(header.iter().map(|s| s.to_string()).collect(), rows));
    }

    /// Text passed through unchanged.
    pub fn raw(&mut self, s: String) {
        self.items.push(Item::Raw(s));
    }

    pub fn render(&self, f: Format) -> String {
        let mut out = String::new();
        for item in &self.items {
            match item {
                Item::Value(v) => out.push_str(&format!("{v}\n")),
                Item::Kv(k, v) => match f {
                    Format::Text => out.push_str(&format!("{k}: {v}\n")),
                    Format::Tsv => out.push_str(&format!("{k}\t{v}\n")),
                },
                Item::Note(s) => out.push_str(&format!("# {s}\n")),
                Item::Raw(s) => out.push_str(s),
                Item::Table(h, rows) => match f {
                    Format::Tsv => {
                        out.push_str(&h.join("\t"));
                        out.push('\n');
                        for r in rows {
                            out.push_str(&r.join("\t"));
                            out.push('\n');
                        }
                    }
                    Format::Text => {
                        let mut width: Vec<usize> = h.iter().map(String::len).collect();
                        for r in rows {
                            for (w, c) in width.iter_mut().zip(r) {
                                *w = (*w).max(c.chars().count());
                            }
                        }
                        for r in std::iter::once(h).chain(rows) {
                            let cells: Vec<String> =
                                r.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
                            out.push_str(cells.join("  ").trim_end());
                            out.push('\n');
                        }
                    }
                },
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_tsv() {
        let mut r = Report::default();
        r.kv("k", 2);
        r.table(&["a", "bb"], vec![vec!["10".into(), "x".into()]]);
        assert_eq!(r.render(Format::Tsv), "k\t2\na\tbb\n10\tx\n");
        assert_eq!(r.render(Format::Text), "k: 2\na   bb\n10  x\n");
    }
}
