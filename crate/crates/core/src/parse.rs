//! Text form of presentations: `< a, x | a^5, x a^3 x a^-2 x x a^-1 >`.
//!
//! Generators are single letters. A relator is a product of factors `g` or
//! `g^e` with `e` a signed integer; `*` between factors is optional and
//! whitespace is ignored. Without the angle brackets the text is read as a
//! relator list and generators are taken in order of first appearance.

use crate::error::{Error, Result};
use crate::fp::{Presentation, Word};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{want}`")))
        }
    }

    fn error(&mut self, msg: impl Into<String>) -> Error {
        self.skip_ws();
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        let bytes = self.text.as_bytes();
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
            while end < bytes.len() && (bytes[end] as char).is_whitespace() {
                end += 1;
            }
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return Err(Error::Parse { pos: start, msg: "expected an integer exponent".into() });
        }
        let literal: String = self.text[start..end].chars().filter(|c| !c.is_whitespace()).collect();
        self.pos = end;
        literal.parse().map_err(|_| Error::Parse { pos: start, msg: "exponent out of range".into() })
    }
}

/// Resolves generator names; `None` means "add unseen letters as new generators".
struct Names<'a> {
    fixed: Option<&'a [String]>,
    learned: Vec<String>,
}

impl Names<'_> {
    fn index(&mut self, name: char) -> Result<u32> {
        let name = name.to_string();
        match self.fixed {
            Some(names) => names
                .iter()
                .position(|g| *g == name)
                .map(|i| i as u32)
                .ok_or(Error::UnknownGenerator(name)),
            None => Ok(match self.learned.iter().position(|g| *g == name) {
                Some(i) => i as u32,
                None => {
                    self.learned.push(name);
                    self.learned.len() as u32 - 1
                }
            }),
        }
    }
}

fn word(cur: &mut Cursor, names: &mut Names, stop: &[char]) -> Result<Word> {
    let start = {
        cur.skip_ws();
        cur.pos
    };
    let mut syllables = Vec::new();
    loop {
        match cur.peek() {
            None => break,
            Some(c) if stop.contains(&c) => break,
            Some('*') if !syllables.is_empty() => {
                cur.bump();
            }
            Some(c) if c.is_alphabetic() => {
                cur.bump();
                let g = names.index(c)?;
                let e = if cur.eat('^') { cur.integer()? } else { 1 };
                syllables.push((g, e));
            }
            Some(_) => return Err(cur.error("expected a generator letter")),
        }
    }
    if syllables.is_empty() {
        return Err(Error::Parse { pos: start, msg: "empty word".into() });
    }
    let w = Word::from_syllables(&syllables);
    if w.is_empty() {
        return Err(Error::Parse { pos: start, msg: "relator reduces to the identity".into() });
    }
    Ok(w)
}

fn word_list(cur: &mut Cursor, names: &mut Names, end: Option<char>) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    let stop: Vec<char> = [','].into_iter().chain(end).collect();
    if cur.peek() == end {
        return Ok(out);
    }
    loop {
        out.push(word(cur, names, &stop)?);
        if !cur.eat(',') {
            return Ok(out);
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut cur = Cursor::new(text);
    if cur.peek() != Some('<') {
        let mut names = Names { fixed: None, learned: Vec::new() };
        let relators = word_list(&mut cur, &mut names, None)?;
        if cur.peek().is_some() {
            return Err(cur.error("unexpected trailing input"));
        }
        return Presentation::new(names.learned, relators);
    }
    cur.expect('<')?;
    let mut generators: Vec<String> = Vec::new();
    if cur.peek() != Some('|') {
        loop {
            match cur.bump() {
                Some(c) if c.is_alphabetic() => {
                    if generators.iter().any(|g| *g == c.to_string()) {
                        return Err(cur.error(format!("generator `{c}` declared twice")));
                    }
                    generators.push(c.to_string());
                }
                _ => return Err(cur.error("expected a single-letter generator")),
            }
            if !cur.eat(',') {
                break;
            }
        }
    }
    cur.expect('|')?;
    let mut names = Names { fixed: Some(&generators), learned: Vec::new() };
    let relators = word_list(&mut cur, &mut names, Some('>'))?;
    cur.expect('>')?;
    if cur.peek().is_some() {
        return Err(cur.error("unexpected trailing input"));
    }
    Presentation::new(generators, relators)
}

/// Comma-separated words over the generators of `p`, e.g. subgroup generators.
pub fn parse_words(text: &str, p: &Presentation) -> Result<Vec<Word>> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Ok(Vec::new());
    }
    let mut names = Names { fixed: Some(&p.generators), learned: Vec::new() };
    let words = word_list(&mut cur, &mut names, None)?;
    if cur.peek().is_some() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(words)
}

pub fn parse_word(text: &str, p: &Presentation) -> Result<Word> {
    let mut words = parse_words(text, p)?;
    if words.len() != 1 {
        return Err(Error::Parse { pos: 0, msg: "expected exactly one word".into() });
    }
    Ok(words.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shiftext::shift_extension;
    use crate::words::ParamTuple;

    #[test]
    fn examples() {
        let p = parse_presentation("< a | a^6 >").unwrap();
        assert_eq!((p.generator_count(), p.relators.len(), p.relators[0].len()), (1, 1, 6));
        let p = parse_presentation("< a, x | a^5, x a^3 x a^-2 x x a^-1 >").unwrap();
        assert_eq!(p, shift_extension(&ParamTuple::new(5, 3, 1, 1).unwrap()));
        assert!(matches!(parse_presentation("< a | a^0 >"), Err(Error::Parse { pos: 6, .. })));
    }

    #[test]
    fn flexible_syntax() {
        let a = parse_presentation("<a,x|a^6,x*a^4*x*a^-2*x*a*x*a^-3>").unwrap();
        let b = parse_presentation("a^6, x a^4 x a^ - 2 x a x a^-3").unwrap();
        assert_eq!(a, b);
        let c = parse_presentation("< a, x | a ^ 6 , x a^+4 x a^-2 x a x a^-3 >").unwrap();
        assert_eq!(a, c);
        assert_eq!(parse_presentation("< a | >").unwrap().relators.len(), 0);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_presentation("< a | b >"), Err(Error::UnknownGenerator("b".into())));
        assert!(matches!(parse_presentation("< a | a a^-1 >"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse_presentation("< a | a^ >"), Err(Error::Parse { .. })));
        assert!(matches!(parse_presentation("< a | a, >"), Err(Error::Parse { .. })));
        assert!(matches!(parse_presentation("< a, a | a >"), Err(Error::Parse { .. })));
        assert!(matches!(parse_presentation("< a | a > x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_presentation("< a | a^99999999999999999999 >"), Err(Error::Parse { .. })));
    }

    #[test]
    fn printer_round_trip() {
        let corpus = [
            "< a | a^6 >",
            "< t, y | t^4, y^3 t^2 y t >",
            "< a, x | a^6, x^2 a x a x a^-2 >",
            "< a, b | a^2, b^3, a b a b a b a b a b >",
            "< a, b, c | a b c, c^-7 a >",
            "< a | >",
        ];
        for text in corpus {
            let p = parse_presentation(text).unwrap();
            let printed = p.to_string();
            assert_eq!(parse_presentation(&printed).unwrap(), p, "{text} -> {printed}");
        }
        for n in 1..=6 {
            for t in ParamTuple::all_with_modulus(n) {
                let p = shift_extension(&t);
                assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
            }
        }
    }

    #[test]
    fn words() {
        let p = parse_presentation("< a, x | a^6 >").unwrap();
        let ws = parse_words("a, x a^-1", &p).unwrap();
        assert_eq!(ws.len(), 2);
        assert_eq!(parse_word("a^3 x^3 a x", &p).unwrap().exponent_sum(1), 4);
        assert!(parse_words("", &p).unwrap().is_empty());
    }
}
