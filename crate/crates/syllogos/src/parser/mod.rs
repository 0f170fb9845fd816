//! Parser for the controlled statement grammar and corpus files.
//!
//! ```text
//! statement := det subject ("are"|"is") ["not"] predicate
//! det       := "all" ["but" INT] | "no" | "some" | "most" | "many" | "few"
//!            | "almost all" | "exactly" INT | "at least" INT
//!            | "[" RAT "," RAT ["," RAT "," RAT] "]"
//! singular  := Name "is" ["a"|"an"] predicate      (capitalized Name)
//! existence := "there is at least one" term
//! ```
//!
//! Everything is case-insensitive except the capitalization that marks a
//! singular statement. Rationals accept decimal ("0.3") and fraction
//! ("3/10") notation. Brace-wrapped names (`{socrates}`) are singleton term
//! references, so rendered statements always re-parse. Comparative
//! determiners ("double", "half") are reserved syntax without semantics and
//! produce a parse error. Named quantifiers from a configuration file are
//! resolved before the built-in determiners.

mod named;

pub use named::{ConfigError, NamedQuantifiers};

use crate::model::{
    parse_rat, Interval, ModelError, Quantifier, Statement, Syllogism, Term, Trapezoid,
};
use thiserror::Error;

/// A parse failure with the byte offset it occurred at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected {expected}, found {found} at byte {position}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

/// Corpus-file failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Structure(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Word(String),
    Number(String),
    Singleton(String),
    LBracket,
    RBracket,
    Comma,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    position: usize,
    text: String,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match b {
            b'[' => {
                i += 1;
                TokenKind::LBracket
            }
            b']' => {
                i += 1;
                TokenKind::RBracket
            }
            b',' => {
                i += 1;
                TokenKind::Comma
            }
            b'{' => {
                let close = input[i..].find('}').map(|o| i + o).ok_or(ParseError {
                    position: start,
                    expected: "closing '}'".into(),
                    found: "end of input".into(),
                })?;
                let inner = input[i + 1..close].to_string();
                i = close + 1;
                TokenKind::Singleton(inner)
            }
            b'0'..=b'9' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_digit() || bytes[i] == b'.' || bytes[i] == b'/')
                {
                    i += 1;
                }
                TokenKind::Number(input[start..i].to_string())
            }
            _ if b.is_ascii_alphabetic() => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'-' || bytes[i] == b'\'')
                {
                    i += 1;
                }
                TokenKind::Word(input[start..i].to_string())
            }
            other => {
                return Err(ParseError {
                    position: start,
                    expected: "a word, number or bracket".into(),
                    found: format!("{:?}", other as char),
                })
            }
        };
        tokens.push(Token {
            kind,
            position: start,
            text: input[start..i].to_string(),
        });
    }
    Ok(tokens)
}

struct Cursor<'a> {
    tokens: &'a [Token],
    index: usize,
    input_len: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.index)
    }

    fn peek_word(&self, offset: usize) -> Option<&'a str> {
        match self.tokens.get(self.index + offset).map(|t| &t.kind) {
            Some(TokenKind::Word(w)) => Some(w.as_str()),
            _ => None,
        }
    }

    fn word_is(&self, offset: usize, expect: &str) -> bool {
        self.peek_word(offset)
            .is_some_and(|w| w.eq_ignore_ascii_case(expect))
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let token = self.tokens.get(self.index);
        if token.is_some() {
            self.index += 1;
        }
        token
    }

    fn position(&self) -> usize {
        self.peek().map_or(self.input_len, |t| t.position)
    }

    fn found(&self) -> String {
        self.peek()
            .map_or_else(|| "end of input".into(), |t| format!("{:?}", t.text))
    }

    fn error(&self, expected: impl Into<String>) -> ParseError {
        ParseError {
            position: self.position(),
            expected: expected.into(),
            found: self.found(),
        }
    }

    fn expect_word(&mut self, expect: &str) -> Result<(), ParseError> {
        if self.word_is(0, expect) {
            self.advance();
            Ok(())
        } else {
            Err(self.error(format!("'{expect}'")))
        }
    }

    fn expect_kind(&mut self, kind: &TokenKind, describe: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t.kind == *kind => {
                self.advance();
                Ok(())
            }
            _ => Err(self.error(describe)),
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        let err = self.error("a non-negative integer");
        match self.peek().map(|t| &t.kind) {
            Some(TokenKind::Number(raw)) => {
                let value = raw.parse::<u64>().map_err(|_| err)?;
                self.advance();
                Ok(value)
            }
            _ => Err(err),
        }
    }

    fn rational(&mut self) -> Result<crate::model::Rat, ParseError> {
        let err = self.error("a rational like 0.3 or 3/10");
        match self.peek().map(|t| &t.kind) {
            Some(TokenKind::Number(raw)) => {
                let value = parse_rat(raw).ok_or(err)?;
                self.advance();
                Ok(value)
            }
            _ => Err(err),
        }
    }
}

/// Parses one statement with no named-quantifier configuration.
pub fn parse_statement(text: &str) -> Result<Statement, ParseError> {
    parse_statement_with(text, &NamedQuantifiers::empty())
}

/// Parses one statement, resolving configured quantifier names first.
pub fn parse_statement_with(text: &str, named: &NamedQuantifiers) -> Result<Statement, ParseError> {
    let tokens = lex(text)?;
    let mut cursor = Cursor {
        tokens: &tokens,
        index: 0,
        input_len: text.len(),
    };
    let statement = parse_statement_tokens(&mut cursor, named)?;
    if cursor.peek().is_some() {
        return Err(cursor.error("end of statement"));
    }
    Ok(statement)
}

fn parse_statement_tokens(
    cursor: &mut Cursor,
    named: &NamedQuantifiers,
) -> Result<Statement, ParseError> {
    // "there is at least one T"
    if cursor.word_is(0, "there") && cursor.word_is(1, "is") {
        cursor.advance();
        cursor.advance();
        cursor.expect_word("at")?;
        cursor.expect_word("least")?;
        cursor.expect_word("one")?;
        let term = parse_term(cursor, "a term name")?;
        return Ok(Statement::existence(term));
    }

    let det_position = cursor.position();
    if let Some(quantifier) = parse_determiner(cursor, named)? {
        let subject = parse_term_until_copula(cursor)?;
        cursor.advance(); // the copula checked by parse_term_until_copula
        let negated = if cursor.word_is(0, "not") {
            if quantifier == Quantifier::No {
                // "no S are not P" invites double-negation readings; the
                // grammar rejects it outright
                return Err(cursor.error("a predicate ('no ... not' is not supported)"));
            }
            cursor.advance();
            true
        } else {
            false
        };
        let predicate = parse_term(cursor, "a predicate")?;
        return Statement::new(quantifier, subject, predicate, negated).map_err(|e| ParseError {
            position: det_position,
            expected: "a well-formed statement".into(),
            found: e.to_string(),
        });
    }

    // singular statement: capitalized single-token name + "is"
    if let Some(word) = cursor.peek_word(0) {
        if word.chars().next().is_some_and(|c| c.is_uppercase()) && cursor.word_is(1, "is") {
            let name = word.to_string();
            cursor.advance();
            cursor.advance();
            if cursor.word_is(0, "a") || cursor.word_is(0, "an") {
                cursor.advance();
            }
            if cursor.word_is(0, "not") {
                return Err(
                    cursor.error("a predicate (negated singular statements are not supported)")
                );
            }
            let predicate = parse_term(cursor, "a predicate")?;
            return Statement::singular(&name, predicate).map_err(|e| ParseError {
                position: det_position,
                expected: "a well-formed singular statement".into(),
                found: e.to_string(),
            });
        }
    }

    Err(cursor.error("a determiner (all, no, some, most, many, few, almost all, all but N, exactly N, at least N, or [a,b])"))
}

/// Parses the determiner, or returns `Ok(None)` when the input does not
/// start with one (the singular fallback).
fn parse_determiner(
    cursor: &mut Cursor,
    named: &NamedQuantifiers,
) -> Result<Option<Quantifier>, ParseError> {
    // configured names win over built-ins so fuzzy runs can redefine "most"
    if !named.is_empty() {
        let words: Vec<&str> = (0..4).map_while(|i| cursor.peek_word(i)).collect();
        if let Some((consumed, quantifier)) = named.longest_match(&words) {
            for _ in 0..consumed {
                cursor.advance();
            }
            return Ok(Some(quantifier.clone()));
        }
    }

    if let Some(TokenKind::LBracket) = cursor.peek().map(|t| &t.kind) {
        return parse_bracket_quantifier(cursor).map(Some);
    }

    let Some(word) = cursor.peek_word(0) else {
        return Ok(None);
    };
    let quantifier = match word.to_lowercase().as_str() {
        "all" => {
            cursor.advance();
            if cursor.word_is(0, "but") {
                cursor.advance();
                Quantifier::AllBut(cursor.integer()?)
            } else {
                Quantifier::All
            }
        }
        "no" => {
            cursor.advance();
            Quantifier::No
        }
        "some" => {
            cursor.advance();
            Quantifier::Some
        }
        "most" => {
            cursor.advance();
            Quantifier::Most
        }
        "many" => {
            cursor.advance();
            Quantifier::Many
        }
        "few" => {
            cursor.advance();
            Quantifier::Few
        }
        "almost" if cursor.word_is(1, "all") => {
            cursor.advance();
            cursor.advance();
            Quantifier::AlmostAll
        }
        "exactly" => {
            cursor.advance();
            Quantifier::Exactly(cursor.integer()?)
        }
        "at" if cursor.word_is(1, "least") => {
            cursor.advance();
            cursor.advance();
            Quantifier::AtLeast(cursor.integer()?)
        }
        "double" | "half" => {
            return Err(cursor.error(
                "a supported determiner (comparative quantifiers 'double'/'half' are reserved but unsupported)",
            ));
        }
        _ => return Ok(None),
    };
    Ok(Some(quantifier))
}

/// `[lo, hi]` interval or `[a, c, d, b]` trapezoid.
fn parse_bracket_quantifier(cursor: &mut Cursor) -> Result<Quantifier, ParseError> {
    let open_position = cursor.position();
    cursor.expect_kind(&TokenKind::LBracket, "'['")?;
    let mut values = vec![cursor.rational()?];
    while cursor.peek().map(|t| &t.kind) == Some(&TokenKind::Comma) {
        cursor.advance();
        values.push(cursor.rational()?);
    }
    cursor.expect_kind(&TokenKind::RBracket, "']'")?;
    let malformed = |what: &str| ParseError {
        position: open_position,
        expected: what.into(),
        found: "a malformed bracket quantifier".into(),
    };
    match values.as_slice() {
        [lo, hi] => Interval::new(*lo, *hi)
            .map(Quantifier::Interval)
            .ok_or_else(|| malformed("an interval with lo <= hi")),
        [a, c, d, b] => Trapezoid::new(*a, *c, *d, *b)
            .map(Quantifier::Trapezoid)
            .ok_or_else(|| malformed("a trapezoid with a <= c <= d <= b")),
        _ => Err(malformed("two rationals [lo,hi] or four [a,c,d,b]")),
    }
}

/// Accumulates subject words up to (not including) the first "are"/"is".
fn parse_term_until_copula(cursor: &mut Cursor) -> Result<Term, ParseError> {
    let mut words: Vec<String> = Vec::new();
    loop {
        match cursor.peek().map(|t| &t.kind) {
            Some(TokenKind::Word(w))
                if w.eq_ignore_ascii_case("are") || w.eq_ignore_ascii_case("is") =>
            {
                break;
            }
            Some(TokenKind::Word(w)) => {
                words.push(w.clone());
                cursor.advance();
            }
            Some(TokenKind::Singleton(inner)) => {
                words.push(format!("{{{inner}}}"));
                cursor.advance();
            }
            _ => return Err(cursor.error("'are' or 'is'")),
        }
    }
    if words.is_empty() {
        return Err(cursor.error("a subject before 'are'/'is'"));
    }
    term_from_words(cursor, words)
}

/// Consumes the remaining tokens as one term name.
fn parse_term(cursor: &mut Cursor, describe: &str) -> Result<Term, ParseError> {
    let mut words: Vec<String> = Vec::new();
    while let Some(token) = cursor.peek() {
        match &token.kind {
            TokenKind::Word(w) => {
                if w.eq_ignore_ascii_case("not") {
                    return Err(cursor.error("a term name without 'not'"));
                }
                words.push(w.clone());
                cursor.advance();
            }
            TokenKind::Singleton(inner) => {
                words.push(format!("{{{inner}}}"));
                cursor.advance();
            }
            _ => return Err(cursor.error(describe)),
        }
    }
    if words.is_empty() {
        return Err(cursor.error(describe));
    }
    term_from_words(cursor, words)
}

fn term_from_words(cursor: &Cursor, words: Vec<String>) -> Result<Term, ParseError> {
    let joined = words.join(" ");
    if words.len() == 1 {
        if let Some(inner) = joined.strip_prefix('{').and_then(|w| w.strip_suffix('}')) {
            return Term::singular(inner).map_err(|e| map_model_error(cursor, e));
        }
    }
    Term::new(&joined).map_err(|e| map_model_error(cursor, e))
}

fn map_model_error(cursor: &Cursor, error: ModelError) -> ParseError {
    ParseError {
        position: cursor.position(),
        expected: "a well-formed term".into(),
        found: error.to_string(),
    }
}

/// Iterates (1-based line number, content) over non-blank, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Parses a corpus file: one statement per line, a `---` separator, then
/// exactly one conclusion line. Blank lines and `#` comments are ignored.
pub fn parse_syllogism_file(text: &str) -> Result<Syllogism, FileError> {
    parse_syllogism_file_with(text, &NamedQuantifiers::empty())
}

pub fn parse_syllogism_file_with(
    text: &str,
    named: &NamedQuantifiers,
) -> Result<Syllogism, FileError> {
    let mut premises = Vec::new();
    let mut conclusion: Option<Statement> = None;
    let mut seen_separator = false;
    for (line, content) in content_lines(text) {
        if content == "---" {
            if seen_separator {
                return Err(FileError::Structure(format!(
                    "line {line}: second '---' separator"
                )));
            }
            seen_separator = true;
            continue;
        }
        let statement = parse_statement_with(content, named)
            .map_err(|source| FileError::Parse { line, source })?;
        if seen_separator {
            if conclusion.is_some() {
                return Err(FileError::Structure(format!(
                    "line {line}: more than one conclusion after '---'"
                )));
            }
            conclusion = Some(statement);
        } else {
            premises.push(statement);
        }
    }
    if !seen_separator {
        return Err(FileError::Structure(
            "missing '---' separator before the conclusion".into(),
        ));
    }
    let conclusion =
        conclusion.ok_or_else(|| FileError::Structure("missing conclusion after '---'".into()))?;
    if premises.is_empty() {
        return Err(FileError::Structure("no premises before '---'".into()));
    }
    Syllogism::new(premises, conclusion).map_err(|e| FileError::Structure(e.to_string()))
}

/// Parses a premises-only file (for conclusion-deriving engines). A `---`
/// separator is a structure error here.
pub fn parse_premises_file(text: &str) -> Result<Vec<Statement>, FileError> {
    parse_premises_file_with(text, &NamedQuantifiers::empty())
}

pub fn parse_premises_file_with(
    text: &str,
    named: &NamedQuantifiers,
) -> Result<Vec<Statement>, FileError> {
    let mut premises = Vec::new();
    for (line, content) in content_lines(text) {
        if content == "---" {
            return Err(FileError::Structure(format!(
                "line {line}: premises-only input must not contain '---'"
            )));
        }
        let statement = parse_statement_with(content, named)
            .map_err(|source| FileError::Parse { line, source })?;
        premises.push(statement);
    }
    if premises.is_empty() {
        return Err(FileError::Structure("no statements in input".into()));
    }
    Ok(premises)
}
