//! Problem files: one ring declaration followed by named ideals, point sets
//! and order ideals.
//!
//! ```text
//! // comment
//! ring Q(c1,c2)[x,y] degrevlex;
//! ideal I = x^2 - c1*y, y^2;
//! points S = (0,0), (1,-1/2);
//! order O = 1, y, x, x*y;
//! ```

use zdci::field::{Field, FieldElement};
use zdci::poly::{parse_polynomial_at, Polynomial, PowerProduct, Ring, TermOrdering};
use zdci::{Error, Result};

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: Ring,
    pub ideals: Vec<(String, Vec<Polynomial>)>,
    pub points: Vec<(String, Vec<Vec<FieldElement>>)>,
    pub orders: Vec<(String, Vec<PowerProduct>)>,
}

impl ProblemFile {
    pub fn ideal(&self, name: &str) -> Option<&[Polynomial]> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, g)| g.as_slice())
    }

    pub fn point_set(&self, name: &str) -> Option<&[Vec<FieldElement>]> {
        self.points.iter().find(|(n, _)| n == name).map(|(_, p)| p.as_slice())
    }
}

/// A slice of the source with the position of its first character.
#[derive(Clone, Copy, Debug)]
struct Span<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

impl<'a> Span<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.col, msg: msg.into() })
    }

    /// Advances past `n` bytes of `text`.
    fn skip(&self, n: usize) -> Span<'a> {
        let (mut line, mut col) = (self.line, self.col);
        for c in self.text[..n].chars() {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Span { text: &self.text[n..], line, col }
    }

    fn trim(&self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        let s = self.skip(lead);
        Span { text: s.text.trim_end(), ..s }
    }

    fn is_empty(&self) -> bool {
        self.text.trim().is_empty()
    }

    /// Splits at `sep` outside parentheses and brackets.
    fn split_top(&self, sep: char) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, c) in self.text.char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                c if c == sep && depth == 0 => {
                    out.push(self.skip(start).take(i - start));
                    start = i + c.len_utf8();
                }
                _ => {}
            }
        }
        out.push(self.skip(start));
        out
    }

    fn take(&self, n: usize) -> Span<'a> {
        Span { text: &self.text[..n], ..*self }
    }
}

/// Blanks out `//` comments, keeping every other byte in place.
fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find("//") {
            Some(i) => format!("{}{}", &l[..i], " ".repeat(l.len() - i)),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let clean = strip_comments(text);
    let all = Span { text: &clean, line: 1, col: 1 };
    let mut statements = all.split_top(';');
    let last = statements.pop().unwrap();
    if !last.is_empty() {
        return last.trim().err("missing `;` after statement");
    }
    let mut ring: Option<Ring> = None;
    let mut file_ideals = Vec::new();
    let mut file_points = Vec::new();
    let mut file_orders = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for st in statements {
        let st = st.trim();
        if st.text.is_empty() {
            return st.err("empty statement");
        }
        let kw_len = st.text.find(|c: char| c.is_whitespace()).unwrap_or(st.text.len());
        let keyword = st.text[..kw_len].to_string();
        let rest = st.skip(kw_len).trim();
        if keyword == "ring" {
            if ring.is_some() {
                return st.err("only one ring declaration is allowed");
            }
            ring = Some(parse_ring(rest)?);
            continue;
        }
        if !matches!(keyword.as_str(), "ideal" | "points" | "order") {
            return st.err(format!("unknown statement `{keyword}`"));
        }
        let Some(r) = ring.as_ref() else {
            return st.err("`ring` must be declared first");
        };
        let (name, body) = parse_binding(rest)?;
        if names.contains(&name) {
            return rest.err(format!("`{name}` is defined twice"));
        }
        names.push(name.clone());
        match keyword.as_str() {
            "ideal" => file_ideals.push((name, parse_ideal(body, r)?)),
            "points" => file_points.push((name, parse_points(body, r)?)),
            _ => file_orders.push((name, parse_order(body, r)?)),
        }
    }
    let Some(ring) = ring else {
        return all.err("no ring declaration");
    };
    Ok(ProblemFile { ring, ideals: file_ideals, points: file_points, orders: file_orders })
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `NAME = body`
fn parse_binding(s: Span<'_>) -> Result<(String, Span<'_>)> {
    let Some(eq) = s.text.find('=') else {
        return s.err("expected `NAME = ...`");
    };
    let name = s.text[..eq].trim();
    if !is_identifier(name) {
        return s.err(format!("invalid name `{name}`"));
    }
    Ok((name.to_string(), s.skip(eq + 1).trim()))
}

/// `FIELD[VARS] ORDERING`
fn parse_ring(s: Span<'_>) -> Result<Ring> {
    let (Some(open), Some(close)) = (s.text.find('['), s.text.find(']')) else {
        return s.err("expected `ring FIELD[vars] ordering`");
    };
    if close < open {
        return s.err("expected `ring FIELD[vars] ordering`");
    }
    let field = parse_field(s.take(open).trim())?;
    let vars_span = s.skip(open + 1).take(close - open - 1);
    let vars = identifiers(vars_span, "variable")?;
    let ord_span = s.skip(close + 1).trim();
    let ordering = if ord_span.text.is_empty() {
        TermOrdering::DegRevLex
    } else {
        match TermOrdering::from_name(ord_span.text) {
            Some(o) => o,
            None => return ord_span.err(format!("unknown ordering `{}`", ord_span.text)),
        }
    };
    if let Some(v) = vars.iter().find(|v| field.param_names().contains(v)) {
        return vars_span.err(format!("`{v}` is both a parameter and a variable"));
    }
    Ring::new(field, vars, ordering).or_else(|e| vars_span.err(e.to_string()))
}

fn identifiers(s: Span<'_>, what: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for part in s.split_top(',') {
        let p = part.trim();
        if !is_identifier(p.text) {
            return p.err(format!("invalid {what} name `{}`", p.text));
        }
        if out.iter().any(|v| v == p.text) {
            return p.err(format!("{what} `{}` repeated", p.text));
        }
        out.push(p.text.to_string());
    }
    Ok(out)
}

/// `Q`, `Fp(p)` or `Q(c1,…,cm)`.
fn parse_field(s: Span<'_>) -> Result<Field> {
    let t = s.text;
    if t == "Q" {
        return Ok(Field::Rational);
    }
    let inner = |prefix: &str| t.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
    if let Some(p) = inner("Fp(") {
        let p: u64 = match p.trim().parse() {
            Ok(p) => p,
            Err(_) => return s.err(format!("invalid modulus `{p}`")),
        };
        return Field::prime(p).or_else(|e| s.err(e.to_string()));
    }
    if inner("Q(").is_some() {
        let params = identifiers(s.skip(2).take(t.len() - 3), "parameter")?;
        return Ok(Field::function(params));
    }
    s.err(format!("unknown field `{t}`; expected Q, Fp(p) or Q(c1,...)"))
}

fn polynomials<'a>(s: Span<'a>, ring: &Ring) -> Result<Vec<(Span<'a>, Polynomial)>> {
    if s.is_empty() {
        return s.err("empty list");
    }
    s.split_top(',')
        .into_iter()
        .map(|part| {
            let p = part.trim();
            if p.text.is_empty() {
                return p.err("empty entry");
            }
            Ok((p, parse_polynomial_at(p.text, ring, p.line, p.col)?))
        })
        .collect()
}

fn parse_ideal(s: Span<'_>, ring: &Ring) -> Result<Vec<Polynomial>> {
    Ok(polynomials(s, ring)?.into_iter().map(|(_, f)| f).collect())
}

fn parse_points(s: Span<'_>, ring: &Ring) -> Result<Vec<Vec<FieldElement>>> {
    if s.is_empty() {
        return s.err("empty point set");
    }
    let mut out = Vec::new();
    for part in s.split_top(',') {
        let p = part.trim();
        let Some(body) = p.text.strip_prefix('(').and_then(|b| b.strip_suffix(')')) else {
            return p.err("expected a point `(a, b, ...)`");
        };
        let coords = p.skip(1).take(body.len());
        let mut point = Vec::new();
        for (span, f) in polynomials(coords, ring)? {
            match f.as_constant() {
                Some(c) => point.push(c),
                None if f.is_zero() => point.push(ring.field().zero()),
                None => return span.err("coordinate is not a constant"),
            }
        }
        if point.len() != ring.nvars() {
            return p.err(format!("point has {} coordinates, ring has {} variables", point.len(), ring.nvars()));
        }
        out.push(point);
    }
    Ok(out)
}

fn parse_order(s: Span<'_>, ring: &Ring) -> Result<Vec<PowerProduct>> {
    let mut out = Vec::new();
    for (span, f) in polynomials(s, ring)? {
        match f.terms() {
            [(t, c)] if c.is_one() => out.push(t.clone()),
            _ => return span.err("order ideal entries must be monic terms"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file() {
        let text = "// header\nring Q[x,y,z] degrevlex;\nideal I = z^2 - y, x^2 - 2*x*z + y,\n  y*z - z - 1, y^2 - y - z; // tail\npoints S = (0,0,0), (1,1/2,-1);\norder O = 1, z;\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.ring.vars(), ["x", "y", "z"]);
        assert_eq!(p.ideal("I").unwrap().len(), 4);
        assert_eq!(p.point_set("S").unwrap().len(), 2);
        assert_eq!(p.orders[0].1.len(), 2);
    }

    #[test]
    fn prime_and_function_fields() {
        let p = parse_problem("ring Fp(7)[x,y] deglex; ideal I = x^7 - 1, y;").unwrap();
        assert_eq!(p.ring.field().characteristic(), 7);
        let p = parse_problem("ring Q(c41,c42)[x,y] degrevlex; ideal I = x^2 - c41*y, (1 - c42)/c41*y^2;").unwrap();
        assert_eq!(p.ring.field().param_names(), ["c41", "c42"]);
    }

    fn error_at(text: &str) -> (usize, usize, String) {
        match parse_problem(text) {
            Err(Error::Parse { line, col, msg }) => (line, col, msg),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn empty_ideal_body() {
        let (line, col, msg) = error_at("ring Q[x] lex;\nideal I = ;");
        assert_eq!((line, msg.as_str()), (2, "empty list"));
        assert_eq!(col, 10);
    }

    #[test]
    fn positions_of_bad_input() {
        assert_eq!(error_at("ring Q[x] lex;\nideal I = x, w;").0, 2);
        assert!(error_at("ring Q[x] rev;").2.contains("unknown ordering"));
        assert!(error_at("ideal I = x;").2.contains("declared first"));
        assert!(error_at("ring Q[x] lex; ideal I = x").2.contains("missing `;`"));
        assert!(error_at("ring Fp(8)[x] lex;").2.contains("prime"));
    }

    #[test]
    fn round_trip_printing() {
        let p = parse_problem("ring Q(c)[x,y] degrevlex; ideal I = (c^2 - 1)/(2*c)*x*y - 3/4*y^2 + x - 1;").unwrap();
        let f = &p.ideal("I").unwrap()[0];
        assert_eq!(&p.ring.parse(&f.to_string()).unwrap(), f);
    }
}
