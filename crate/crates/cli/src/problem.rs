//! Problem files.
//!
//! ```text
//! # comment
//! vars x, y, z
//! params t
//! ideal:
//! y^2 - x^3
//! map: t; t^3 + t^2; t^5
//! map: x; y + x^2; z denom 1
//! matrix: 1 3
//! 1 0 0
//! point: 0, 0, 0
//! ```
//!
//! A `map:` whose entries parse over `params` is a parametrization; otherwise
//! it is a map on the `vars`, optionally divided by `denom`.

use std::fmt;
use std::path::Path;

use bilip_core::invariants::AffinePoint;
use bilip_core::lipschitz::LinearProjection;
use bilip_core::{Error, Ideal, Parametrization, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct MapSpec {
    pub components: Vec<Polynomial>,
    pub denominator: Option<Polynomial>,
}

#[derive(Debug, Clone, Default)]
pub struct ProblemFile {
    pub vars: Option<Ring>,
    pub params: Option<Ring>,
    pub ideal: Option<Ideal>,
    pub parametrization: Option<Parametrization>,
    pub map: Option<MapSpec>,
    pub matrix: Option<LinearProjection>,
    pub point: Option<AffinePoint>,
}

impl ProblemFile {
    pub fn read(path: &Path) -> Result<ProblemFile, ParseError> {
        let text = std::fs::read_to_string(path).map_err(|e| ParseError {
            line: 0,
            column: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        parse_problem(&text)
    }

    /// The coordinate ring: declared `vars`, else `x1..xn` for a parametrization.
    pub fn ring(&self) -> Option<&Ring> {
        self.vars.as_ref().or(self.parametrization.as_ref().map(|p| &p.target))
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Ideal,
    Matrix,
}

struct Line<'a> {
    number: usize,
    /// Byte offset of `text` within the raw line.
    offset: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, at: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column: self.offset + at + 1,
            message: message.into(),
        }
    }

    /// Error from the polynomial parser, whose positions count from 1 within `part`.
    fn poly_err(&self, part_start: usize, e: Error) -> ParseError {
        match e {
            Error::Syntax { position, message } => self.err(part_start + position.saturating_sub(1), message),
            other => self.err(part_start, other.to_string()),
        }
    }
}

fn strip_comment(s: &str) -> &str {
    s.split('#').next().unwrap_or("")
}

/// Comma- or whitespace-separated fields with their offsets.
fn fields(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        let sep = c == ',' || c.is_whitespace();
        match (sep, start) {
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out
}

/// `;`-separated parts with their offsets, trimmed.
fn parts(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut begin = 0;
    for piece in s.split(';') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((begin + lead, piece.trim()));
        begin += piece.len() + 1;
    }
    out
}

fn parse_rational(line: &Line, at: usize, s: &str) -> Result<Rational, ParseError> {
    if s.split_once('/').is_some_and(|(_, d)| d.trim_start_matches('+').chars().all(|c| c == '0')) {
        return Err(line.err(at, "zero denominator"));
    }
    s.parse().map_err(|_| line.err(at, format!("bad rational `{s}`")))
}

fn parse_ring(line: &Line, at: usize, rest: &str) -> Result<Ring, ParseError> {
    let names: Vec<&str> = fields(rest).into_iter().map(|(_, n)| n).collect();
    Ring::new(names).map_err(|e| line.err(at, e.to_string()))
}

struct MapLine<'a> {
    line: Line<'a>,
    body_offset: usize,
    body: &'a str,
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut pf = ProblemFile::default();
    let mut section = Section::None;
    let mut ideal_lines: Vec<(Line, usize, &str)> = Vec::new();
    let mut saw_ideal = false;
    let mut maps: Vec<MapLine> = Vec::new();
    let mut matrix_header: Option<(Line, usize, usize)> = None;
    let mut matrix_rows: Vec<Vec<Rational>> = Vec::new();
    let mut point: Option<(Line, Vec<(usize, Rational)>)> = None;

    for (i, raw) in text.lines().enumerate() {
        let body = strip_comment(raw);
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let offset = body.len() - body.trim_start().len();
        let line = Line {
            number: i + 1,
            offset,
            text: trimmed,
        };
        let keyword = |k: &str| -> Option<(usize, &str)> {
            let rest = line.text.strip_prefix(k)?;
            if k.ends_with(':') || rest.is_empty() || rest.starts_with(char::is_whitespace) {
                Some((k.len(), rest))
            } else {
                None
            }
        };
        if let Some((at, rest)) = keyword("vars") {
            if pf.vars.is_some() {
                return Err(line.err(0, "duplicate `vars`"));
            }
            pf.vars = Some(parse_ring(&line, at, rest)?);
            section = Section::None;
        } else if let Some((at, rest)) = keyword("params") {
            if pf.params.is_some() {
                return Err(line.err(0, "duplicate `params`"));
            }
            pf.params = Some(parse_ring(&line, at, rest)?);
            section = Section::None;
        } else if let Some((at, rest)) = keyword("ideal:") {
            if saw_ideal {
                return Err(line.err(0, "duplicate `ideal:`"));
            }
            saw_ideal = true;
            section = Section::Ideal;
            if !rest.trim().is_empty() {
                let lead = rest.len() - rest.trim_start().len();
                ideal_lines.push((line, at + lead, rest.trim()));
            }
        } else if let Some((at, rest)) = keyword("map:") {
            let lead = rest.len() - rest.trim_start().len();
            maps.push(MapLine {
                line,
                body_offset: at + lead,
                body: rest.trim(),
            });
            section = Section::None;
        } else if let Some((at, rest)) = keyword("matrix:") {
            if matrix_header.is_some() {
                return Err(line.err(0, "duplicate `matrix:`"));
            }
            let dims = fields(rest);
            if dims.len() != 2 {
                return Err(line.err(at, "expected `matrix: k n`"));
            }
            let k = dims[0].1.parse().map_err(|_| line.err(at + dims[0].0, "bad row count"))?;
            let n = dims[1].1.parse().map_err(|_| line.err(at + dims[1].0, "bad column count"))?;
            matrix_header = Some((line, k, n));
            section = Section::Matrix;
        } else if let Some((at, rest)) = keyword("point:") {
            if point.is_some() {
                return Err(line.err(0, "duplicate `point:`"));
            }
            let coords = fields(rest)
                .into_iter()
                .map(|(o, s)| parse_rational(&line, at + o, s).map(|q| (at + o, q)))
                .collect::<Result<Vec<_>, _>>()?;
            point = Some((line, coords));
            section = Section::None;
        } else {
            match section {
                Section::Ideal => ideal_lines.push((line, 0, trimmed)),
                Section::Matrix => {
                    let (_, k, n) = matrix_header.as_ref().expect("matrix section has a header");
                    if matrix_rows.len() == *k {
                        return Err(line.err(0, format!("matrix has more than {k} rows")));
                    }
                    let row = fields(line.text)
                        .into_iter()
                        .map(|(o, s)| parse_rational(&line, o, s))
                        .collect::<Result<Vec<_>, _>>()?;
                    if row.len() != *n {
                        return Err(line.err(0, format!("expected {n} entries, found {}", row.len())));
                    }
                    matrix_rows.push(row);
                }
                Section::None => {
                    let word = line.text.split_whitespace().next().unwrap_or("");
                    return Err(line.err(0, format!("unexpected `{word}`")));
                }
            }
        }
    }

    for m in maps {
        parse_map(&mut pf, m)?;
    }

    if saw_ideal {
        let ring = pf.vars.clone().ok_or(ParseError {
            line: ideal_lines.first().map_or(1, |(l, _, _)| l.number),
            column: 1,
            message: "`ideal:` needs `vars`".into(),
        })?;
        let mut gens = Vec::new();
        for (line, at, text) in &ideal_lines {
            gens.push(Polynomial::parse(text, &ring).map_err(|e| line.poly_err(*at, e))?);
        }
        pf.ideal = Some(Ideal::new(&ring, gens).expect("generators share the ring"));
    }

    if let Some((line, k, _)) = matrix_header {
        if matrix_rows.len() != k {
            return Err(line.err(0, format!("expected {k} matrix rows, found {}", matrix_rows.len())));
        }
        pf.matrix = Some(LinearProjection::new(matrix_rows).map_err(|e| line.err(0, e.to_string()))?);
    }

    if let Some((line, coords)) = point {
        if let Some(r) = pf.ring() {
            if coords.len() != r.arity() {
                return Err(line.err(0, format!("point has {} coordinates, ring has {}", coords.len(), r.arity())));
            }
        }
        pf.point = Some(AffinePoint(coords.into_iter().map(|(_, q)| q).collect()));
    }
    Ok(pf)
}

fn parse_polys(line: &Line, base: usize, body: &str, ring: &Ring) -> Result<Vec<Polynomial>, ParseError> {
    parts(body)
        .into_iter()
        .map(|(o, p)| {
            if p.is_empty() {
                return Err(line.err(base + o, "empty map component"));
            }
            Polynomial::parse(p, ring).map_err(|e| line.poly_err(base + o, e))
        })
        .collect()
}

fn parse_map(pf: &mut ProblemFile, m: MapLine) -> Result<(), ParseError> {
    let line = &m.line;
    let (comps, denom) = match m.body.find(" denom ") {
        Some(i) => (&m.body[..i], Some((i + " denom ".len(), m.body[i + " denom ".len()..].trim()))),
        None => (m.body, None),
    };
    if let Some(params) = pf.params.clone() {
        if denom.is_none() {
            if let Ok(polys) = parse_polys(line, m.body_offset, comps, &params) {
                if pf.parametrization.is_some() {
                    return Err(line.err(0, "duplicate parametrization"));
                }
                let target = match &pf.vars {
                    Some(v) => v.clone(),
                    None => {
                        let names = (1..=polys.len()).map(|i| params.fresh_name(&format!("x{i}")));
                        Ring::new(names).map_err(|e| line.err(0, e.to_string()))?
                    }
                };
                let p = Parametrization::new(target, polys).map_err(|e| line.err(0, e.to_string()))?;
                pf.parametrization = Some(p);
                return Ok(());
            }
        }
    }
    let vars = pf
        .vars
        .clone()
        .ok_or_else(|| line.err(0, "map entries do not parse over `params` and no `vars` are declared"))?;
    if pf.map.is_some() {
        return Err(line.err(0, "duplicate map"));
    }
    let components = parse_polys(line, m.body_offset, comps, &vars)?;
    let denominator = match denom {
        Some((o, d)) => Some(Polynomial::parse(d, &vars).map_err(|e| line.poly_err(m.body_offset + o, e))?),
        None => None,
    };
    pf.map = Some(MapSpec {
        components,
        denominator,
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_ideal() {
        let pf = parse_problem("vars x,y\nideal:\ny^2 - x^3\n").unwrap();
        let ideal = pf.ideal.unwrap();
        assert_eq!(ideal.generators().len(), 1);
        assert_eq!(ideal.generators()[0].to_string(), "-x^3 + y^2");
    }

    #[test]
    fn monomial_curve_parametrization() {
        let pf = parse_problem("params t\nmap: t^4; t^5; t^6; t^7\n").unwrap();
        let p = pf.parametrization.unwrap();
        assert_eq!(p.target.variables(), ["x1", "x2", "x3", "x4"]);
        assert_eq!(p.components[3].to_string(), "t^7");
    }

    #[test]
    fn empty_ideal_is_zero() {
        let pf = parse_problem("vars x, y\nideal:\n# nothing\n").unwrap();
        assert!(pf.ideal.unwrap().is_zero_ideal());
    }

    #[test]
    fn both_kinds_of_map() {
        let text = "vars x,y,z\nparams t\nmap: t; t^3 + t^2; t^5\nmap: x; y + x^2; z\npoint: 0, 0, 0\n";
        let pf = parse_problem(text).unwrap();
        assert!(pf.parametrization.is_some());
        let m = pf.map.unwrap();
        assert_eq!(m.components[1].to_string(), "x^2 + y");
        assert!(m.denominator.is_none());
        assert_eq!(pf.point.unwrap().0.len(), 3);
    }

    #[test]
    fn rational_map_and_matrix() {
        let text = "vars x, y\nmap: 1; y denom x\nmatrix: 1 2\n1 -1/2\n";
        let pf = parse_problem(text).unwrap();
        assert_eq!(pf.map.unwrap().denominator.unwrap().to_string(), "x");
        assert_eq!(pf.matrix.unwrap().rows()[0][1], Rational::new((-1).into(), 2.into()));
    }

    #[test]
    fn errors_carry_line_and_column() {
        let e = parse_problem("vars x,y\nideal:\ny^2 - 2x\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 8));
        let e = parse_problem("vars x,y\nideal:\n  y - q\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.column >= 3);
        let e = parse_problem("vars x\nbogus line\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = parse_problem("vars x,y\nmatrix: 1 2\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_problem("vars x,y\nmatrix: 2 2\n1 2\n2 4\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
