//! Text forms of scalars and PBW elements.
//!
//! Elements render as `(c) m + (c) m`, where `c` is a scalar such as
//! `1/2 - 3*z6 + z6^2` and `m` a monomial such as `x1^2 x2 g^3`.

use hopf_deform_core::braided::DiagonalDatum;
use hopf_deform_core::hopfcore::{HopfAlgebra, PbwMonomial};
use hopf_deform_core::linalg::SparseVec;
use hopf_deform_core::liftings::{TElem, TKey};
use hopf_deform_core::scalars::Scalar;

pub fn render_element(h: &HopfAlgebra, v: &SparseVec) -> String {
    h.render(v)
}

/// Inverse of `Scalar`'s display form.
pub fn parse_scalar_text(s: &str) -> Result<Scalar, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty scalar".into());
    }
    let bytes: Vec<char> = t.chars().collect();
    let mut terms = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == '+' || bytes[i] == '-') && !matches!(bytes[i - 1], '^' | '*' | '/') {
            terms.push(bytes[start..i].iter().collect::<String>());
            start = i;
        }
    }
    terms.push(bytes[start..].iter().collect());
    let mut acc = Scalar::zero();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b.to_string()),
            None => (false, term.strip_prefix('+').unwrap_or(&term).to_string()),
        };
        let (coef, root) = match body.find('z') {
            Some(p) => {
                let c = body[..p].trim_end_matches('*');
                (if c.is_empty() { "1".to_string() } else { c.to_string() }, Some(body[p + 1..].to_string()))
            }
            None => (body.clone(), None),
        };
        let c = match coef.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.parse().map_err(|_| format!("bad coefficient {coef:?}"))?;
                let q: i64 = q.parse().map_err(|_| format!("bad coefficient {coef:?}"))?;
                Scalar::from_ratio(p, q).map_err(|e| e.to_string())?
            }
            None => Scalar::from_i64(coef.parse().map_err(|_| format!("bad coefficient {coef:?}"))?),
        };
        let v = match root {
            None => c,
            Some(r) => {
                let (e, k) = match r.split_once('^') {
                    Some((e, k)) => (e.to_string(), k.parse::<i64>().map_err(|_| format!("bad exponent in {term:?}"))?),
                    None => (r.clone(), 1),
                };
                let e: u32 = e.parse().map_err(|_| format!("bad root order in {term:?}"))?;
                &c * &Scalar::root(e, k)
            }
        };
        acc += &if neg { -&v } else { v };
    }
    Ok(acc)
}

/// Parses `x1^2 x2 g^3` (or `1`) into a basis index.
pub fn parse_monomial(h: &HopfAlgebra, d: &DiagonalDatum, s: &str) -> Result<usize, String> {
    let grp = d.group();
    let nf = grp.orders().len();
    let mut x = vec![0u32; d.rank()];
    let mut g = vec![0i64; nf];
    for tok in s.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => (n, e.parse::<i64>().map_err(|_| format!("bad exponent in {tok:?}"))?),
            None => (tok, 1),
        };
        if let Some(i) = name.strip_prefix('x') {
            let i: usize = i.parse().map_err(|_| format!("bad generator {tok:?}"))?;
            if i == 0 || i > x.len() || exp < 0 {
                return Err(format!("generator out of range in {tok:?}"));
            }
            x[i - 1] += exp as u32;
        } else if let Some(k) = name.strip_prefix('g') {
            let k = if k.is_empty() { 1 } else { k.parse::<usize>().map_err(|_| format!("bad group factor {tok:?}"))? };
            if k == 0 || k > nf {
                return Err(format!("group factor out of range in {tok:?}"));
            }
            g[k - 1] += exp;
        } else {
            return Err(format!("unknown token {tok:?}"));
        }
    }
    let m = PbwMonomial { x, g: grp.element(&g) };
    h.index_of(&m).ok_or_else(|| format!("{m} is not a PBW basis element"))
}

/// Inverse of [`render_element`].
pub fn parse_element(h: &HopfAlgebra, d: &DiagonalDatum, s: &str) -> Result<SparseVec, String> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut out: Vec<(usize, Scalar)> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = body.find(')').ok_or("unbalanced parenthesis")?;
        let c = parse_scalar_text(&body[..close])?;
        let after = &body[close + 1..];
        let (mono, next) = match after.find(" + (") {
            Some(p) => (&after[..p], &after[p + 3..]),
            None => (after, ""),
        };
        let idx = parse_monomial(h, d, mono)?;
        match out.iter_mut().find(|(i, _)| *i == idx) {
            Some((_, v)) => *v += &c,
            None => out.push((idx, c)),
        }
        rest = next;
    }
    out.retain(|(_, c)| !c.is_zero());
    out.sort_by_key(|(i, _)| *i);
    Ok(out)
}

fn render_key(d: &DiagonalDatum, k: &TKey) -> String {
    let mut parts: Vec<String> = k.0.iter().map(|&l| format!("x{}", l + 1)).collect();
    let g = PbwMonomial { x: vec![0; d.rank()], g: k.1.clone() }.to_string();
    if g != "1" || parts.is_empty() {
        parts.push(g);
    }
    parts.join(" ")
}

/// Renders an element of the tensor algebra smash product, words unreduced.
pub fn render_telem(d: &DiagonalDatum, a: &TElem) -> String {
    if a.is_zero() {
        return "0".into();
    }
    a.terms.iter().map(|(k, c)| format!("({c}) {}", render_key(d, k))).collect::<Vec<_>>().join(" + ")
}
