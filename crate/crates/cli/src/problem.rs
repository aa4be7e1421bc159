//! Problem-file parser.
//!
//! Grammar (one statement per line; brackets may span lines; `#` comments):
//!
//! ```text
//! ring Q[x,y,...] order=grevlex|lex
//! rel = f1, f2            # optional, before any ideal/matrix
//! ideal NAME = f1, f2, ...
//! matrix NAME = [[f, g], [h, k]]
//! ```
//!
//! Polynomials use the expression syntax of the core parser: integers,
//! rationals `a/b`, `+ - * ^`, parentheses, explicit `*`.

use std::collections::BTreeMap;
use std::sync::Arc;

use idealclosure::parse::parse_polynomial;
use idealclosure::{Error, MonomialOrder, PolyMatrix, Polynomial, Ring};

#[derive(Debug)]
pub struct ProblemFile {
    pub ring: Arc<Ring>,
    pub ideals: BTreeMap<String, Vec<Polynomial>>,
    pub matrices: BTreeMap<String, PolyMatrix>,
}

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

/// A chunk of source with the document position of its first character.
#[derive(Debug, Clone)]
struct Fragment {
    text: String,
    line: usize,
    col: usize,
}

impl Fragment {
    fn trimmed(&self) -> Fragment {
        let mut line = self.line;
        let mut col = self.col;
        let mut s = self.text.as_str();
        loop {
            if let Some(rest) = s.strip_prefix('\n') {
                line += 1;
                col = 1;
                s = rest;
            } else if let Some(rest) = s.strip_prefix(|c: char| c.is_whitespace() && c != '\n') {
                col += 1;
                s = rest;
            } else {
                break;
            }
        }
        Fragment {
            text: s.trim_end().to_string(),
            line,
            col,
        }
    }

    fn parse_poly(&self, ring: &Ring) -> Result<Polynomial, Error> {
        let frag = self.trimmed();
        if frag.text.is_empty() {
            return Err(parse_err(frag.line, frag.col, "empty polynomial"));
        }
        parse_polynomial(ring, &frag.text)
            .map_err(|e| Error::from(e.offset(frag.line, frag.col)))
    }

    /// Splits on top-level commas (depth-0 w.r.t. parentheses and brackets),
    /// tracking document positions.
    fn split_top_commas(&self) -> Vec<Fragment> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut cur_line = self.line;
        let mut cur_col = self.col;
        let mut line = self.line;
        let mut col = self.col;
        for ch in self.text.chars() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                ',' if depth == 0 => {
                    out.push(Fragment {
                        text: std::mem::take(&mut cur),
                        line: cur_line,
                        col: cur_col,
                    });
                    cur_line = line;
                    cur_col = col + 1;
                }
                _ => {}
            }
            if ch != ',' || depth != 0 {
                cur.push(ch);
            }
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        out.push(Fragment {
            text: cur,
            line: cur_line,
            col: cur_col,
        });
        out
    }
}

/// Splits the document into statements: newline-terminated at bracket
/// depth zero, with `#` comments stripped.
fn statements(text: &str) -> Vec<Fragment> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut start_line = 1usize;
    let mut start_col = 1usize;
    let mut started = false;
    let mut line = 1usize;
    let mut col = 1usize;
    let mut in_comment = false;
    for ch in text.chars() {
        match ch {
            '#' => in_comment = true,
            '\n' => {
                in_comment = false;
                if depth == 0 {
                    if started && !cur.trim().is_empty() {
                        out.push(Fragment {
                            text: std::mem::take(&mut cur),
                            line: start_line,
                            col: start_col,
                        });
                    } else {
                        cur.clear();
                    }
                    started = false;
                } else if started {
                    cur.push('\n');
                }
                line += 1;
                col = 1;
                continue;
            }
            _ if in_comment => {}
            '[' | '(' => {
                depth += 1;
                if !started {
                    started = true;
                    start_line = line;
                    start_col = col;
                }
                cur.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(ch);
            }
            c if c.is_whitespace() => {
                if started {
                    cur.push(c);
                }
            }
            c => {
                if !started {
                    started = true;
                    start_line = line;
                    start_col = col;
                }
                cur.push(c);
            }
        }
        col += 1;
    }
    if started && !cur.trim().is_empty() {
        out.push(Fragment {
            text: cur,
            line: start_line,
            col: start_col,
        });
    }
    out
}

fn take_word(frag: &Fragment) -> (String, Fragment) {
    let trimmed = frag.trimmed();
    let end = trimmed
        .text
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(trimmed.text.len());
    let word = trimmed.text[..end].to_string();
    let rest = Fragment {
        text: trimmed.text[end..].to_string(),
        line: trimmed.line,
        col: trimmed.col + end,
    };
    (word, rest)
}

fn expect_char(frag: &Fragment, ch: char) -> Result<Fragment, Error> {
    let trimmed = frag.trimmed();
    match trimmed.text.strip_prefix(ch) {
        Some(rest) => Ok(Fragment {
            text: rest.to_string(),
            line: trimmed.line,
            col: trimmed.col + 1,
        }),
        None => Err(parse_err(
            trimmed.line,
            trimmed.col,
            format!("expected `{ch}`"),
        )),
    }
}

fn parse_ring(frag: &Fragment) -> Result<Arc<Ring>, Error> {
    let (field, rest) = take_word(frag);
    if field != "Q" {
        let t = frag.trimmed();
        return Err(parse_err(
            t.line,
            t.col,
            "only the rational field `Q` is supported",
        ));
    }
    let rest = expect_char(&rest, '[')?;
    let close = rest.text.find(']').ok_or_else(|| {
        parse_err(rest.line, rest.col, "unclosed `[` in ring declaration")
    })?;
    let vars_frag = Fragment {
        text: rest.text[..close].to_string(),
        line: rest.line,
        col: rest.col,
    };
    let mut vars = Vec::new();
    for piece in vars_frag.split_top_commas() {
        let t = piece.trimmed();
        if t.text.is_empty()
            || !t
                .text
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_')
            || t.text.chars().next().unwrap().is_ascii_digit()
        {
            return Err(parse_err(t.line, t.col, "invalid variable name"));
        }
        vars.push(t.text);
    }
    let tail = Fragment {
        text: rest.text[close + 1..].to_string(),
        line: rest.line,
        col: rest.col + close + 1,
    }
    .trimmed();
    let order = if tail.text.is_empty() {
        MonomialOrder::GrevLex
    } else {
        let (word, after_eq) = take_word(&tail);
        if word != "order" {
            return Err(parse_err(tail.line, tail.col, "expected `order=...`"));
        }
        let value = expect_char(&after_eq, '=')?;
        let (name, trailing) = take_word(&value);
        if !trailing.trimmed().text.is_empty() {
            let t = trailing.trimmed();
            return Err(parse_err(t.line, t.col, "trailing input after order"));
        }
        match name.as_str() {
            "grevlex" => MonomialOrder::GrevLex,
            "lex" => MonomialOrder::Lex,
            other => {
                return Err(parse_err(
                    value.line,
                    value.col,
                    format!("unknown order `{other}` (expected grevlex or lex)"),
                ))
            }
        }
    };
    Ring::new(vars, order)
}

fn parse_name_eq(frag: &Fragment) -> Result<(String, Fragment), Error> {
    let (name, rest) = take_word(frag);
    if name.is_empty() {
        let t = frag.trimmed();
        return Err(parse_err(t.line, t.col, "expected a name"));
    }
    let rest = expect_char(&rest, '=')?;
    Ok((name, rest))
}

fn parse_matrix(frag: &Fragment, ring: &Ring) -> Result<PolyMatrix, Error> {
    let open = expect_char(frag, '[')?;
    let t = frag.trimmed();
    // the payload must end with the matching `]`
    let body_text = open.text.trim_end();
    let Some(body_text) = body_text.strip_suffix(']') else {
        return Err(parse_err(t.line, t.col, "unclosed matrix bracket"));
    };
    let body = Fragment {
        text: body_text.to_string(),
        line: open.line,
        col: open.col,
    };
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for row_frag in body.split_top_commas() {
        let row_frag = row_frag.trimmed();
        let inner = expect_char(&row_frag, '[')?;
        let inner_text = inner.text.trim_end();
        let Some(inner_text) = inner_text.strip_suffix(']') else {
            return Err(parse_err(
                row_frag.line,
                row_frag.col,
                "unclosed matrix row",
            ));
        };
        let row_body = Fragment {
            text: inner_text.to_string(),
            line: inner.line,
            col: inner.col,
        };
        let mut row = Vec::new();
        for entry in row_body.split_top_commas() {
            row.push(entry.parse_poly(ring)?);
        }
        rows.push(row);
    }
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(parse_err(t.line, t.col, "matrix rows of unequal length"));
    }
    PolyMatrix::new(rows.len(), cols, rows.into_iter().flatten().collect())
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, Error> {
    let stmts = statements(text);
    let mut ring: Option<Arc<Ring>> = None;
    let mut relations: Vec<Polynomial> = Vec::new();
    let mut saw_object = false;
    let mut ideals: BTreeMap<String, Vec<Polynomial>> = BTreeMap::new();
    let mut matrices: BTreeMap<String, PolyMatrix> = BTreeMap::new();

    for stmt in &stmts {
        let (head, rest) = take_word(stmt);
        let at = stmt.trimmed();
        match head.as_str() {
            "ring" => {
                if ring.is_some() {
                    return Err(parse_err(at.line, at.col, "duplicate ring declaration"));
                }
                ring = Some(parse_ring(&rest)?);
            }
            "rel" => {
                let base = ring.as_ref().ok_or_else(|| {
                    parse_err(at.line, at.col, "rel before ring declaration")
                })?;
                if saw_object {
                    return Err(parse_err(
                        at.line,
                        at.col,
                        "rel must precede ideal and matrix declarations",
                    ));
                }
                if !relations.is_empty() {
                    return Err(parse_err(at.line, at.col, "duplicate rel statement"));
                }
                let body = expect_char(&rest, '=')?;
                for piece in body.split_top_commas() {
                    relations.push(piece.parse_poly(base)?);
                }
            }
            "ideal" => {
                let base = current_ring(&ring, &relations, at.line, at.col)?;
                saw_object = true;
                let (name, body) = parse_name_eq(&rest)?;
                if ideals.contains_key(&name) || matrices.contains_key(&name) {
                    return Err(parse_err(
                        at.line,
                        at.col,
                        format!("duplicate name `{name}`"),
                    ));
                }
                let mut gens = Vec::new();
                for piece in body.split_top_commas() {
                    gens.push(piece.parse_poly(&base)?);
                }
                ideals.insert(name, gens);
            }
            "matrix" => {
                let base = current_ring(&ring, &relations, at.line, at.col)?;
                saw_object = true;
                let (name, body) = parse_name_eq(&rest)?;
                if ideals.contains_key(&name) || matrices.contains_key(&name) {
                    return Err(parse_err(
                        at.line,
                        at.col,
                        format!("duplicate name `{name}`"),
                    ));
                }
                matrices.insert(name, parse_matrix(&body, &base)?);
            }
            "" => {
                return Err(parse_err(at.line, at.col, "expected a statement"));
            }
            other => {
                return Err(parse_err(
                    at.line,
                    at.col,
                    format!(
                        "unknown statement `{other}` (expected ring, rel, ideal, or matrix)"
                    ),
                ));
            }
        }
    }

    let Some(base) = ring else {
        return Err(parse_err(1, 1, "missing ring declaration"));
    };
    let ring = if relations.is_empty() {
        base
    } else {
        base.quotient(relations)?
    };
    Ok(ProblemFile {
        ring,
        ideals,
        matrices,
    })
}

fn current_ring(
    ring: &Option<Arc<Ring>>,
    relations: &[Polynomial],
    line: usize,
    col: usize,
) -> Result<Arc<Ring>, Error> {
    let base = ring
        .as_ref()
        .ok_or_else(|| parse_err(line, col, "object before ring declaration"))?;
    if relations.is_empty() {
        Ok(Arc::clone(base))
    } else {
        base.quotient(relations.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_problem() {
        let text = "\
# a sample problem
ring Q[x,y] order=grevlex
ideal I = x^2, x*y^4, y^5
ideal Rad = x, y
matrix M = [[0, x],
            [-x, 0]]
";
        let pf = parse_problem(text).unwrap();
        assert_eq!(pf.ring.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(pf.ideals["I"].len(), 3);
        assert_eq!(pf.matrices["M"].rows(), 2);
    }

    #[test]
    fn quotient_ring_problem() {
        let text = "\
ring Q[x,y,z]
rel = x^4+y^4+z^4
ideal I = x, y, z^2
";
        let pf = parse_problem(text).unwrap();
        assert!(pf.ring.has_relations());
    }

    #[test]
    fn empty_ideal_body_is_an_error() {
        let text = "ring Q[x,y]\nideal I = \n";
        let err = parse_problem(text).unwrap_err();
        match err {
            idealclosure::Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn errors_carry_document_positions() {
        let text = "ring Q[x,y]\nideal I = x^2, x*q\n";
        let err = parse_problem(text).unwrap_err();
        match err {
            idealclosure::Error::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 18);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn duplicate_names_rejected() {
        let text = "ring Q[x]\nideal I = x\nideal I = x^2\n";
        assert!(parse_problem(text).is_err());
    }

    #[test]
    fn rel_after_ideal_rejected() {
        let text = "ring Q[x]\nideal I = x\nrel = x^2\n";
        assert!(parse_problem(text).is_err());
    }

    #[test]
    fn unknown_statement_rejected() {
        let text = "ring Q[x]\nfrobnicate I = x\n";
        assert!(parse_problem(text).is_err());
    }
}
