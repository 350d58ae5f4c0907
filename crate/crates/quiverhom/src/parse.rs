//! The line-oriented algebra/module file format.
//!
//! ```text
//! # comment
//! field = Q              (or Fp(5))
//! vertices = 1 2 3
//! arrow a : 1 -> 2
//! arrow b : 2 -> 3
//! relation a*b - 2 c     (paths in traversal order, x*y means "x then y";
//!                         terms are [coefficient] path, coefficients are
//!                         integers or fractions p/q)
//! cap = 30               (optional ideal cap)
//!
//! module M               (optional named module literals)
//! dims = 1 0 2
//! action a = [[1],[2/3]] (rows × cols = target dim × source dim; [] when
//!                         either side is zero-dimensional)
//! ```
//!
//! `render_algebra_file` writes the same format back, so presented algebras
//! (for example endomorphism algebras) round-trip through `build`.

use std::sync::Arc;

use crate::algebra::{build_quotient, FDAlgebra, DEFAULT_IDEAL_CAP};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::module::FDModule;
use crate::quiver::{Path, PathExpr, Quiver};

pub struct AlgebraFile {
    pub algebra: Arc<FDAlgebra>,
    pub modules: Vec<(String, FDModule)>,
}

pub fn parse_algebra_file(text: &str, field_override: Option<FieldSpec>) -> Result<AlgebraFile> {
    let mut field: Option<FieldSpec> = field_override;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    let mut cap = DEFAULT_IDEAL_CAP;
    let mut module_blocks: Vec<(usize, String, Vec<(usize, String)>)> = Vec::new();
    let mut in_module = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim().to_string();
        if line.is_empty() {
            continue;
        }
        let n = lineno + 1;
        let err = |msg: &str| Error::Parse {
            line: n,
            msg: msg.to_string(),
        };
        if let Some(rest) = line.strip_prefix("module") {
            let name = rest.trim();
            if name.is_empty() {
                return Err(err("module needs a name"));
            }
            module_blocks.push((n, name.to_string(), Vec::new()));
            in_module = true;
            continue;
        }
        if in_module {
            module_blocks.last_mut().unwrap().2.push((n, line));
            continue;
        }
        if let Some(rest) = line.strip_prefix("field") {
            let v = expect_eq(rest, n)?;
            if field_override.is_none() {
                field = Some(parse_field(&v, n)?);
            }
        } else if let Some(rest) = line.strip_prefix("vertices") {
            let v = expect_eq(rest, n)?;
            vertices = v.split_whitespace().map(str::to_string).collect();
        } else if let Some(rest) = line.strip_prefix("arrow") {
            // arrow a : 1 -> 2
            let parts: Vec<&str> = rest.splitn(2, ':').collect();
            if parts.len() != 2 {
                return Err(err("expected `arrow <label> : <source> -> <target>`"));
            }
            let label = parts[0].trim().to_string();
            let ends: Vec<&str> = parts[1].split("->").collect();
            if ends.len() != 2 || label.is_empty() {
                return Err(err("expected `arrow <label> : <source> -> <target>`"));
            }
            arrows.push((label, ends[0].trim().to_string(), ends[1].trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("relation") {
            relation_lines.push((n, rest.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("cap") {
            let v = expect_eq(rest, n)?;
            cap = v.parse().map_err(|_| err("cap must be a positive integer"))?;
        } else {
            return Err(err(&format!("unrecognized directive `{line}`")));
        }
    }

    let field = field.ok_or(Error::Parse {
        line: 0,
        msg: "missing `field = ...` line".into(),
    })?;
    if vertices.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "missing `vertices = ...` line".into(),
        });
    }
    let quiver = Quiver::new(
        vertices.clone(),
        arrows
            .iter()
            .map(|(l, s, t)| {
                let si = vertices.iter().position(|v| v == s).ok_or(Error::Parse {
                    line: 0,
                    msg: format!("arrow `{l}` uses unknown vertex `{s}`"),
                })?;
                let ti = vertices.iter().position(|v| v == t).ok_or(Error::Parse {
                    line: 0,
                    msg: format!("arrow `{l}` uses unknown vertex `{t}`"),
                })?;
                Ok((l.clone(), si, ti))
            })
            .collect::<Result<Vec<_>>>()?,
    )?;
    let relations = relation_lines
        .iter()
        .map(|(n, s)| parse_relation(&quiver, &field, s, *n))
        .collect::<Result<Vec<_>>>()?;
    let algebra = Arc::new(build_quotient(&quiver, &relations, cap, field)?);

    let mut modules = Vec::new();
    for (_, name, lines) in module_blocks {
        modules.push((name, parse_module_block(&algebra, &lines)?));
    }
    Ok(AlgebraFile { algebra, modules })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn expect_eq(rest: &str, line: usize) -> Result<String> {
    let rest = rest.trim();
    let Some(v) = rest.strip_prefix('=') else {
        return Err(Error::Parse {
            line,
            msg: "expected `= ...`".into(),
        });
    };
    Ok(v.trim().to_string())
}

pub fn parse_field(s: &str, line: usize) -> Result<FieldSpec> {
    let s = s.trim();
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(inner) = s.strip_prefix("Fp(").and_then(|x| x.strip_suffix(')')) {
        let p: u64 = inner.trim().parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad prime `{inner}`"),
        })?;
        return FieldSpec::prime(p);
    }
    Err(Error::Parse {
        line,
        msg: format!("unknown field `{s}` (use Q or Fp(p))"),
    })
}

/// `relation a*b - 2 c*d + 1/3 e*f` — terms are signed, each with an
/// optional coefficient token followed by a traversal-order path.
fn parse_relation(q: &Quiver, field: &FieldSpec, s: &str, line: usize) -> Result<PathExpr> {
    let mut tokens: Vec<String> = Vec::new();
    // separate +/- as tokens
    let mut cur = String::new();
    for ch in s.chars() {
        if ch == '+' || ch == '-' {
            if !cur.trim().is_empty() {
                tokens.push(cur.trim().to_string());
            }
            tokens.push(ch.to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        tokens.push(cur.trim().to_string());
    }
    let mut terms: Vec<(Scalar, Path)> = Vec::new();
    let mut sign = 1i64;
    let mut i = 0;
    while i < tokens.len() {
        match tokens[i].as_str() {
            "+" => {
                sign = 1;
                i += 1;
            }
            "-" => {
                sign = -1;
                i += 1;
            }
            tok => {
                let (coeff, path_str) = split_term(tok);
                let mut c = match coeff {
                    Some(cs) => parse_scalar(field, &cs, line)?,
                    None => field.one(),
                };
                if sign < 0 {
                    c = field.neg(&c);
                }
                let labels: Vec<&str> = path_str.split('*').map(str::trim).collect();
                let path = Path::from_labels(q, &labels).map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
                terms.push((c, path));
                sign = 1;
                i += 1;
            }
        }
    }
    if terms.is_empty() {
        return Err(Error::Parse {
            line,
            msg: "empty relation".into(),
        });
    }
    Ok(PathExpr::from_terms(terms))
}

/// Splits "2 a*b" or "1/3 a" into coefficient and path parts.
fn split_term(tok: &str) -> (Option<String>, String) {
    let parts: Vec<&str> = tok.split_whitespace().collect();
    if parts.len() >= 2 && looks_numeric(parts[0]) {
        (Some(parts[0].to_string()), parts[1..].join(""))
    } else {
        (None, parts.join(""))
    }
}

fn looks_numeric(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_digit() || c == '/')
        && s.chars().next().is_some_and(|c| c.is_ascii_digit())
}

pub fn parse_scalar(field: &FieldSpec, s: &str, line: usize) -> Result<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let a: i64 = num.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad number `{s}`"),
    })?;
    let b: i64 = den.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad number `{s}`"),
    })?;
    field.from_fraction(a, b).map_err(|e| Error::Parse {
        line,
        msg: e.to_string(),
    })
}

fn parse_module_block(a: &Arc<FDAlgebra>, lines: &[(usize, String)]) -> Result<FDModule> {
    let field = a.field;
    let mut dims: Option<Vec<usize>> = None;
    let mut actions: Vec<Option<ExactMatrix>> = vec![None; a.quiver.arrows.len()];
    for (n, line) in lines {
        let err = |msg: String| Error::Parse { line: *n, msg };
        if let Some(rest) = line.strip_prefix("dims") {
            let v = expect_eq(rest, *n)?;
            let parsed: Vec<usize> = v
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| err(format!("bad dimension `{x}`"))))
                .collect::<Result<_>>()?;
            if parsed.len() != a.num_vertices() {
                return Err(err(format!(
                    "expected {} dimensions, found {}",
                    a.num_vertices(),
                    parsed.len()
                )));
            }
            dims = Some(parsed);
        } else if let Some(rest) = line.strip_prefix("action") {
            let parts: Vec<&str> = rest.splitn(2, '=').collect();
            if parts.len() != 2 {
                return Err(err("expected `action <arrow> = [[...]]`".into()));
            }
            let label = parts[0].trim();
            let Some(ai) = a.quiver.arrow_index(label) else {
                return Err(err(format!("unknown arrow `{label}`")));
            };
            let dims_ref = dims
                .as_ref()
                .ok_or_else(|| err("dims must come before actions".into()))?;
            let arr = &a.quiver.arrows[ai];
            let rows = dims_ref[arr.target];
            let cols = dims_ref[arr.source];
            actions[ai] = Some(parse_matrix(&field, parts[1].trim(), rows, cols, *n)?);
        } else {
            return Err(err(format!("unrecognized module line `{line}`")));
        }
    }
    let dims = dims.ok_or(Error::Parse {
        line: 0,
        msg: "module block missing `dims = ...`".into(),
    })?;
    let actions: Vec<ExactMatrix> = actions
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            let arr = &a.quiver.arrows[i];
            m.unwrap_or_else(|| ExactMatrix::zeros(field, dims[arr.target], dims[arr.source]))
        })
        .collect();
    FDModule::new(a.clone(), dims, actions)
}

fn parse_matrix(
    field: &FieldSpec,
    s: &str,
    rows: usize,
    cols: usize,
    line: usize,
) -> Result<ExactMatrix> {
    let err = |msg: String| Error::Parse { line, msg };
    let s = s.trim();
    if s == "[]" {
        if rows == 0 || cols == 0 {
            return Ok(ExactMatrix::zeros(*field, rows, cols));
        }
        return Err(err(format!("expected a {rows}×{cols} matrix")));
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| err("matrix must be wrapped in [...]".into()))?;
    let mut data = Vec::new();
    for row_str in inner.split("],") {
        let row_str = row_str.trim();
        let row_inner = row_str
            .strip_prefix('[')
            .map(|x| x.strip_suffix(']').unwrap_or(x))
            .ok_or_else(|| err("rows must be wrapped in [...]".into()))?;
        let row: Vec<Scalar> = if row_inner.trim().is_empty() {
            Vec::new()
        } else {
            row_inner
                .split(',')
                .map(|e| {
                    let e = e.trim();
                    let (sgn, body) = match e.strip_prefix('-') {
                        Some(b) => (-1, b.trim()),
                        None => (1, e),
                    };
                    let v = parse_scalar(field, body, line)?;
                    Ok(if sgn < 0 { field.neg(&v) } else { v })
                })
                .collect::<Result<_>>()?
        };
        data.push(row);
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(err(format!("expected a {rows}×{cols} matrix")));
    }
    Ok(ExactMatrix::from_rows(*field, data))
}

/// Writes an algebra back in the file format; `build` on the output
/// reproduces the same presentation.
pub fn render_algebra_file(a: &FDAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("field = {}\n", a.field));
    out.push_str(&format!("vertices = {}\n", a.quiver.vertices.join(" ")));
    for arr in &a.quiver.arrows {
        out.push_str(&format!(
            "arrow {} : {} -> {}\n",
            arr.label, a.quiver.vertices[arr.source], a.quiver.vertices[arr.target]
        ));
    }
    for rel in &a.relations {
        let mut parts = Vec::new();
        for (i, (c, p)) in rel.terms.iter().enumerate() {
            let coeff = c.render();
            let lead = if i == 0 { "" } else { "+ " };
            let body = if coeff == "1" {
                p.display_traversal(&a.quiver)
            } else {
                format!("{} {}", coeff, p.display_traversal(&a.quiver))
            };
            parts.push(format!("{lead}{body}"));
        }
        out.push_str(&format!("relation {}\n", parts.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX4: &str = "\
# the running Nakayama example
field = Q
vertices = 1 2 3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow c : 3 -> 1
relation a*b*c*a*b
relation c*a*b*c
";

    #[test]
    fn parses_example_four() {
        let f = parse_algebra_file(EX4, None).unwrap();
        assert_eq!(f.algebra.dim(), 14);
    }

    #[test]
    fn parses_relation_combinations() {
        let text = "\
field = Q
vertices = 1
arrow x : 1 -> 1
arrow y : 1 -> 1
relation x*x
relation y*y
relation x*y - y*x
";
        let f = parse_algebra_file(text, None).unwrap();
        assert_eq!(f.algebra.dim(), 4);
    }

    #[test]
    fn field_override_reinterprets_entries() {
        let f5 = FieldSpec::prime(5).unwrap();
        let f = parse_algebra_file(EX4, Some(f5)).unwrap();
        assert_eq!(f.algebra.field, f5);
        assert_eq!(f.algebra.dim(), 14);
    }

    #[test]
    fn parse_error_reports_line() {
        let text = "field = Q\nvertices = 1\narrow x : 1 -> 2\n";
        match parse_algebra_file(text, None) {
            Err(Error::Parse { .. }) | Err(Error::Invalid(_)) => {}
            Err(other) => panic!("expected a parse failure, got {other}"),
            Ok(_) => panic!("expected a parse failure"),
        }
    }

    #[test]
    fn malformed_relation_is_rejected() {
        let text = "field = Q\nvertices = 1\narrow x : 1 -> 1\nrelation x*q\n";
        assert!(matches!(
            parse_algebra_file(text, None),
            Err(Error::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn module_literals_parse_and_validate() {
        let text = "\
field = Q
vertices = 1
arrow x : 1 -> 1
relation x*x

module M
dims = 2
action x = [[0, 1], [0, 0]]
";
        let f = parse_algebra_file(text, None).unwrap();
        assert_eq!(f.modules.len(), 1);
        assert_eq!(f.modules[0].0, "M");
        assert_eq!(f.modules[0].1.total_dim(), 2);

        let bad = text.replace("[[0, 1], [0, 0]]", "[[1, 0], [0, 1]]");
        assert!(parse_algebra_file(&bad, None).is_err()); // x² must act as zero
    }

    #[test]
    fn render_round_trips() {
        let f = parse_algebra_file(EX4, None).unwrap();
        let rendered = render_algebra_file(&f.algebra);
        let again = parse_algebra_file(&rendered, None).unwrap();
        assert_eq!(again.algebra.dim(), 14);
        assert_eq!(again.algebra.cartan_matrix(), f.algebra.cartan_matrix());
    }
}
