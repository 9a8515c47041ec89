//! Line-oriented text formats shared by `.poset`, `.space`, `.frmmap` and `.ttg` files.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
    /// `"Syntax"` for malformed lines, otherwise the name of the semantic error.
    pub kind: &'static str,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
            kind: "Syntax",
        }
    }

    pub fn with_kind(mut self, kind: &'static str) -> Self {
        self.kind = kind;
        self
    }
}

/// A non-blank, non-comment line split into a directive and its arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directive<'a> {
    pub line: usize,
    pub keyword: &'a str,
    pub args: Vec<&'a str>,
}

impl<'a> Directive<'a> {
    pub fn expect_args(&self, n: usize) -> Result<(), ParseError> {
        if self.args.len() != n {
            return Err(ParseError::new(
                self.line,
                format!(
                    "`{}` takes {} argument(s), found {}",
                    self.keyword,
                    n,
                    self.args.len()
                ),
            ));
        }
        Ok(())
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, message)
    }
}

/// Splits `text` into directives. `#` starts a comment that runs to end of line.
pub fn directives(text: &str) -> Vec<Directive<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut words = content.split_whitespace();
            let keyword = words.next()?;
            Some(Directive {
                line: i + 1,
                keyword,
                args: words.collect(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let d = directives("# header\n\nelem a # trailing\n  cover a b\n");
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].line, 3);
        assert_eq!(d[0].keyword, "elem");
        assert_eq!(d[0].args, vec!["a"]);
        assert_eq!(d[1].args, vec!["a", "b"]);
    }

    #[test]
    fn arity_mismatch_reports_line() {
        let d = directives("elem a b\n");
        let err = d[0].expect_args(1).unwrap_err();
        assert_eq!(err.line, 1);
    }
}
