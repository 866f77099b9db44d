use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest entry magnitude a label may carry.
pub const MAX_ENTRY: i32 = 10;

/// The characteristic of an orbit: its integer evaluation sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrbitLabel(Vec<i32>);

impl OrbitLabel {
    pub fn new(entries: Vec<i32>) -> Self {
        OrbitLabel(entries)
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The all-zero characteristic belongs to the zero orbit only.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn in_bounds(&self) -> bool {
        self.0.iter().all(|e| e.abs() <= MAX_ENTRY)
    }

    /// Digits run together, with the final entry split off by a space when
    /// `split_last` is set or when it is not a single digit.
    pub fn render(&self, split_last: bool) -> String {
        let digit = |e: &i32| (0..=9).contains(e);
        let Some((last, head)) = self.0.split_last() else {
            return String::new();
        };
        if !head.iter().all(digit) {
            let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
            return parts.join(",");
        }
        let mut s: String = head.iter().map(i32::to_string).collect();
        if (split_last || !digit(last)) && !s.is_empty() {
            s.push(' ');
        }
        s.push_str(&last.to_string());
        s
    }

    /// Parses the written forms used for characteristics: a run of digits
    /// (`1011101`), digits with a separated and possibly signed final entry
    /// (`400004 -10`, `40000-2`, `110001~1`), or one integer per entry separated by
    /// commas or spaces (`1,1`).
    pub fn parse(text: &str, expected_len: usize) -> Result<OrbitLabel> {
        let err = |reason: String| Error::LabelParse {
            text: text.to_string(),
            reason,
        };
        let mut cleaned = String::with_capacity(text.len());
        let mut prev = ' ';
        for c in text.chars() {
            let c = match c {
                '\u{2212}' => '-',
                '~' => ' ',
                c => c,
            };
            // `40000-2` is a digit run followed by a signed final entry
            if c == '-' && prev.is_ascii_digit() {
                cleaned.push(' ');
            }
            cleaned.push(c);
            prev = c;
        }
        let tokens: Vec<&str> = cleaned
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(err("empty label".into()));
        }

        let entries: Vec<i32> = if tokens.len() == expected_len {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<i32>()
                        .map_err(|_| err(format!("`{t}` is not an integer")))
                })
                .collect::<Result<_>>()?
        } else {
            let mut out = Vec::new();
            for (k, t) in tokens.iter().enumerate() {
                if t.starts_with('-') || t.starts_with('+') {
                    if k + 1 != tokens.len() {
                        return Err(err("only the final entry may carry a sign".into()));
                    }
                    out.push(
                        t.parse::<i32>()
                            .map_err(|_| err(format!("`{t}` is not an integer")))?,
                    );
                } else if t.chars().all(|c| c.is_ascii_digit()) {
                    out.extend(t.chars().map(|c| c as i32 - '0' as i32));
                } else {
                    return Err(err(format!("unexpected characters in `{t}`")));
                }
            }
            out
        };

        if entries.len() != expected_len {
            return Err(err(format!(
                "expected {expected_len} entries, found {}",
                entries.len()
            )));
        }
        let label = OrbitLabel(entries);
        if !label.in_bounds() {
            return Err(err(format!("entries must lie in [-{MAX_ENTRY}, {MAX_ENTRY}]")));
        }
        Ok(label)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &str, n: usize) -> Result<Vec<i32>> {
        OrbitLabel::parse(t, n).map(|l| l.0)
    }

    #[test]
    fn written_forms() {
        assert_eq!(p("1011101", 7).unwrap(), vec![1, 0, 1, 1, 1, 0, 1]);
        assert_eq!(p("400004 -10", 7).unwrap(), vec![4, 0, 0, 0, 0, 4, -10]);
        assert_eq!(p("1,1", 2).unwrap(), vec![1, 1]);
        assert_eq!(p("40000 −2", 6).unwrap(), vec![4, 0, 0, 0, 0, -2]);
        assert_eq!(p("110001~1", 7).unwrap(), vec![1, 1, 0, 0, 0, 1, 1]);
        assert_eq!(p("100 2", 4).unwrap(), vec![1, 0, 0, 2]);
        assert_eq!(p("40000-2", 6).unwrap(), vec![4, 0, 0, 0, 0, -2]);
        assert_eq!(p(" 4 0 0 0 0 -2 ", 6).unwrap(), vec![4, 0, 0, 0, 0, -2]);
    }

    #[test]
    fn rejects_bad_text() {
        assert!(p("", 2).is_err());
        assert!(p("12a", 3).is_err());
        assert!(p("1 -2 3", 5).is_err());
        assert!(p("101", 4).is_err());
        assert!(p("0 0 0 0 0 0 -11", 7).is_err());
        assert!(p("1,1,1", 2).is_err());
    }

    #[test]
    fn render_splits_signed_tail() {
        let l = OrbitLabel::new(vec![4, 0, 0, 0, 0, 4, -10]);
        assert_eq!(l.to_string(), "400004 -10");
        assert_eq!(OrbitLabel::new(vec![1, 0, 1]).to_string(), "101");
        assert_eq!(OrbitLabel::new(vec![0, 0, 1, 1]).render(true), "001 1");
    }
}
