//! Text form of words.
//!
//! Tokens are separated by whitespace: `s<i>`, `a<r>` or `t<i>`, optionally
//! followed by `^<k>` with `k` a nonzero integer. Powers expand into |k| unit
//! letters. `e` (or empty input) is the empty word.

use crate::error::{Error, Result};
use crate::word::{Generator, Letter, Sign, SurfaceParams, Word};

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

/// Splits `text` into (byte offset, token) pairs.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

fn parse_token(offset: usize, token: &str, out: &mut Vec<Letter>) -> Result<()> {
    let mut chars = token.chars();
    let kind = chars.next().expect("tokens are non-empty");
    let rest = chars.as_str();
    let (index_text, exponent_text) = match rest.split_once('^') {
        Some((index, exponent)) => (index, Some(exponent)),
        None => (rest, None),
    };
    if index_text.is_empty() || !index_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(offset + 1, format!("expected a strand or wall index in {token:?}")));
    }
    let index: usize = index_text
        .parse()
        .map_err(|_| syntax(offset + 1, format!("index too large in {token:?}")))?;
    let generator = match kind {
        's' => Generator::Sigma(index),
        'a' => Generator::Wall(index),
        't' => Generator::Tau(index),
        _ => return Err(syntax(offset, format!("unknown generator {kind:?}"))),
    };
    let exponent: i64 = match exponent_text {
        None => 1,
        Some(e) => {
            let at = offset + 1 + index_text.len() + 1;
            let k: i64 = e
                .parse()
                .map_err(|_| syntax(at, format!("expected an integer exponent in {token:?}")))?;
            if k == 0 {
                return Err(syntax(at, "exponent must be nonzero"));
            }
            k
        }
    };
    let sign = if exponent > 0 { Sign::Pos } else { Sign::Neg };
    let letter = Letter::new(generator, sign);
    for _ in 0..exponent.unsigned_abs() {
        out.push(letter);
    }
    Ok(())
}

/// Parses `text` and validates the result against `params`.
pub fn parse(text: &str, params: &SurfaceParams) -> Result<Word> {
    let mut letters = Vec::new();
    let all: Vec<(usize, &str)> = tokens(text).collect();
    if let [(_, "e")] = all.as_slice() {
        return Ok(Word::empty());
    }
    for (offset, token) in all {
        if token == "e" {
            return Err(syntax(offset, "\"e\" must stand alone"));
        }
        parse_token(offset, token, &mut letters)?;
    }
    let word = Word::from(letters);
    word.validate(params)?;
    Ok(word)
}

/// Canonical text: one token per letter, `^-1` on inverse letters, `e` for
/// the empty word.
pub fn format(word: &Word) -> String {
    word.to_string()
}
