//! Monoid morphisms `A* → B*`, given by the images of the letters.

use std::fmt::Write as _;

use crate::alphabet::{Alphabet, SymbolId, Word, EPSILON_TOKEN};
use crate::error::{Error, Result};

/// A morphism from `source*` to `target*`: each source symbol has exactly one
/// image word over the target alphabet (possibly ε).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Morphism> {
        if images.len() != source.len() {
            return Err(Error::input(format!(
                "morphism needs {} images, got {}",
                source.len(),
                images.len()
            )));
        }
        for img in &images {
            for &s in img {
                if s >= target.len() {
                    return Err(Error::input("image letter outside the target alphabet"));
                }
            }
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    /// Identity morphism on an alphabet.
    pub fn identity(alphabet: &Alphabet) -> Morphism {
        let images = alphabet.ids().map(|s| vec![s]).collect();
        Morphism {
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, s: SymbolId) -> &Word {
        &self.images[s]
    }

    pub fn apply(&self, w: &[SymbolId]) -> Word {
        let mut out = Vec::new();
        for &s in w {
            out.extend_from_slice(&self.images[s]);
        }
        out
    }

    /// Parses the `.mor` format:
    ///
    /// ```text
    /// source: a b          # optional; defaults to the mapped symbols
    /// target: a b c        # optional; defaults to the symbols used in images
    /// morphism: a->bc b->eps
    /// ```
    pub fn parse(text: &str) -> Result<Morphism> {
        let mut source: Option<Vec<String>> = None;
        let mut target: Option<Vec<String>> = None;
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let no = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("source:") {
                source = Some(rest.split_whitespace().map(String::from).collect());
            } else if let Some(rest) = line.strip_prefix("target:") {
                target = Some(rest.split_whitespace().map(String::from).collect());
            } else if let Some(rest) = line.strip_prefix("morphism:") {
                for item in rest.split_whitespace() {
                    let (from, to) = item
                        .split_once("->")
                        .ok_or_else(|| Error::parse(no, format!("expected `sym->word`, found {item:?}")))?;
                    pairs.push((from.to_string(), to.to_string()));
                }
            } else {
                return Err(Error::parse(no, format!("unrecognized line {line:?}")));
            }
        }
        if pairs.is_empty() {
            return Err(Error::parse(0, "missing `morphism:` line"));
        }
        let source = Alphabet::new(match source {
            Some(s) => s,
            None => pairs.iter().map(|(f, _)| f.clone()).collect(),
        })?;
        let target = match target {
            Some(t) => Alphabet::new(t)?,
            None => {
                // Symbols in order of first appearance in the images. Images
                // are contiguous, so without a declared target each image
                // character is a symbol.
                let mut seen = Vec::new();
                for (_, to) in &pairs {
                    if to == EPSILON_TOKEN {
                        continue;
                    }
                    for c in to.chars() {
                        let tok = c.to_string();
                        if !seen.contains(&tok) {
                            seen.push(tok);
                        }
                    }
                }
                if seen.is_empty() {
                    // All images are ε; reuse the source alphabet.
                    source.clone()
                } else {
                    Alphabet::new(seen)?
                }
            }
        };
        let mut images: Vec<Option<Word>> = vec![None; source.len()];
        for (from, to) in &pairs {
            let s = source
                .id(from)
                .ok_or_else(|| Error::input(format!("mapped symbol {from:?} not in source alphabet")))?;
            if images[s].is_some() {
                return Err(Error::input(format!("symbol {from:?} mapped twice")));
            }
            images[s] = Some(target.parse_word(to)?);
        }
        let images: Vec<Word> = images
            .into_iter()
            .enumerate()
            .map(|(s, img)| {
                img.ok_or_else(|| {
                    Error::input(format!("source symbol {:?} has no image", source.symbol(s)))
                })
            })
            .collect::<Result<_>>()?;
        Morphism::new(source, target, images)
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        let src: Vec<&str> = self.source.symbols().collect();
        let tgt: Vec<&str> = self.target.symbols().collect();
        writeln!(out, "source: {}", src.join(" ")).unwrap();
        writeln!(out, "target: {}", tgt.join(" ")).unwrap();
        let items: Vec<String> = self
            .source
            .ids()
            .map(|s| {
                format!(
                    "{}->{}",
                    self.source.symbol(s),
                    self.target.format_word(&self.images[s])
                )
            })
            .collect();
        writeln!(out, "morphism: {}", items.join(" ")).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_apply() {
        let m = Morphism::parse("morphism: a->bc b->eps\n").unwrap();
        assert_eq!(m.source().symbols().collect::<Vec<_>>(), ["a", "b"]);
        assert_eq!(m.target().symbols().collect::<Vec<_>>(), ["b", "c"]);
        let w = m.source().parse_word("aba").unwrap();
        assert_eq!(m.target().format_word(&m.apply(&w)), "bcbc");
    }

    #[test]
    fn print_round_trip() {
        let m = Morphism::parse("source: x y\ntarget: 0 1\nmorphism: x->11 y->0\n").unwrap();
        let again = Morphism::parse(&m.print()).unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn morphism_law_on_concatenation() {
        let m = Morphism::parse("morphism: a->ab b->a\n").unwrap();
        let u = m.source().parse_word("ab").unwrap();
        let v = m.source().parse_word("ba").unwrap();
        let uv: Word = u.iter().chain(v.iter()).copied().collect();
        let mut img = m.apply(&u);
        img.extend(m.apply(&v));
        assert_eq!(m.apply(&uv), img);
    }
}
