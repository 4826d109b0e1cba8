//! Interchange formats: the ElementDoc JSON schema (the canonical
//! machine format) and the plain text element grammar (for humans).
//!
//! JSON shape: {"p":3,"m":2,"n":1,"terms":[{"x":[2,1],"y":[0],"c":1}]}
//! with terms sorted strictly decreasing by concatenated exponent tuple
//! and coefficients in [1, p).
//!
//! Text shape: terms joined by " + ", each `c*mono`, `mono` when c = 1,
//! or a bare residue for the constant term; monomial factors `x<i>` /
//! `y<j>` (1-based) joined by `*` with `^(a)` omitted at a = 1 and the
//! whole factor omitted at a = 0; the empty monomial renders `1`, the
//! zero element `0`.

use divsym::{Context, Element, Monomial};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub p: u64,
    pub m: usize,
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

impl ElementDoc {
    pub fn from_element(e: &Element) -> Self {
        let ctx = e.context();
        ElementDoc {
            p: ctx.p(),
            m: ctx.m(),
            n: ctx.n(),
            terms: e
                .terms_desc()
                .map(|(mono, c)| TermDoc {
                    x: mono.xexp().to_vec(),
                    y: mono.yexp().to_vec(),
                    c: c.value(),
                })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<Element, String> {
        let ctx = Context::new(self.p, self.m, self.n).map_err(|e| e.to_string())?;
        let mut terms: Vec<(Monomial, i128)> = Vec::new();
        let mut prev: Option<Monomial> = None;
        for term in &self.terms {
            if term.x.len() != self.m || term.y.len() != self.n {
                return Err(format!(
                    "term exponent lengths must be m={} and n={}",
                    self.m, self.n
                ));
            }
            if term.c == 0 || term.c >= self.p {
                return Err(format!("coefficient {} outside [1, {})", term.c, self.p));
            }
            let mono = Monomial::new(term.x.clone(), term.y.clone());
            if let Some(p) = &prev {
                if *p <= mono {
                    return Err(format!(
                        "terms must be sorted strictly decreasing; {p} precedes {mono}"
                    ));
                }
            }
            prev = Some(mono.clone());
            terms.push((mono, term.c as i128));
        }
        Ok(Element::from_terms(ctx, terms))
    }
}

pub fn render_text(e: &Element) -> String {
    e.to_string()
}

fn parse_factor(token: &str) -> Result<(char, usize, u64), String> {
    let bytes = token.as_bytes();
    if bytes.is_empty() {
        return Err("empty factor".into());
    }
    let kind = bytes[0] as char;
    if kind != 'x' && kind != 'y' {
        return Err(format!("factor `{token}` must start with x or y"));
    }
    let rest = &token[1..];
    let (idx_str, exp) = match rest.split_once("^(") {
        Some((idx, tail)) => {
            let exp_str = tail
                .strip_suffix(')')
                .ok_or_else(|| format!("unterminated exponent in `{token}`"))?;
            let exp: u64 = exp_str
                .parse()
                .map_err(|_| format!("bad exponent in `{token}`"))?;
            (idx, exp)
        }
        None => (rest, 1),
    };
    let index: usize = idx_str
        .parse()
        .map_err(|_| format!("bad variable index in `{token}`"))?;
    if index == 0 {
        return Err("variable indices are 1-based".into());
    }
    Ok((kind, index - 1, exp))
}

pub fn parse_text(input: &str, ctx: Context) -> Result<Element, String> {
    let input = input.trim();
    if input == "0" {
        return Ok(Element::zero(ctx));
    }
    let mut element = Element::zero(ctx);
    for term in input.split(" + ") {
        let term = term.trim();
        if term.is_empty() {
            return Err("empty term".into());
        }
        let mut coeff: i128 = 1;
        let mut xexp = vec![0u64; ctx.m()];
        let mut yexp = vec![0u64; ctx.n()];
        let mut factors: Vec<&str> = term.split('*').collect();
        // a leading bare integer is the coefficient (or the whole
        // constant term)
        if let Ok(c) = factors[0].parse::<u64>() {
            coeff = c as i128;
            factors.remove(0);
        }
        for token in factors {
            let (kind, index, exp) = parse_factor(token)?;
            match kind {
                'x' => {
                    if index >= ctx.m() {
                        return Err(format!("x{} outside the context", index + 1));
                    }
                    if xexp[index] != 0 {
                        return Err(format!("variable x{} repeated", index + 1));
                    }
                    xexp[index] = exp;
                }
                _ => {
                    if index >= ctx.n() {
                        return Err(format!("y{} outside the context", index + 1));
                    }
                    if yexp[index] != 0 {
                        return Err(format!("variable y{} repeated", index + 1));
                    }
                    yexp[index] = exp;
                }
            }
        }
        element = element.add(&Element::from_monomial(
            ctx,
            Monomial::new(xexp, yexp),
            coeff,
        ));
    }
    Ok(element)
}
