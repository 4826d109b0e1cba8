//! Divided-power monomials and elements.
//!
//! Monomials are exponent tuples (i1..im | j1..jn) for a product
//! x1^(i1)..xm^(im) y1^(j1)..yn^(jn). The product rule per variable is
//! z^(a) z^(b) = C(a+b, a) z^(a+b), so a term dies exactly when adding
//! exponents carries in base p. Elements are sparse coefficient maps in a
//! fixed context (p, m, n), kept in canonical lex order with no zeros.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{self, FpScalar};
use crate::error::Error;

/// Ambient algebra: odd prime p, m "x" variables and n "y" variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Context {
    p: u64,
    m: usize,
    n: usize,
}

impl Context {
    pub fn new(p: u64, m: usize, n: usize) -> Result<Self, Error> {
        arith::check_modulus(p)?;
        if m + n == 0 {
            return Err(Error::EmptyContext);
        }
        Ok(Context { p, m, n })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scalar(&self, v: i128) -> FpScalar {
        FpScalar::new(v, self.p)
    }
}

/// One of the variables of a context.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Var {
    X(usize),
    Y(usize),
}

/// Exponent tuple of a divided-power product. Ordering is lexicographic on
/// the concatenated tuple, x block first; within one context all tuples
/// have equal lengths, so the derived order is plain lex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    xexp: Vec<u64>,
    yexp: Vec<u64>,
}

impl Monomial {
    pub fn new(xexp: Vec<u64>, yexp: Vec<u64>) -> Self {
        Monomial { xexp, yexp }
    }

    pub fn constant(m: usize, n: usize) -> Self {
        Monomial { xexp: vec![0; m], yexp: vec![0; n] }
    }

    pub fn xexp(&self) -> &[u64] {
        &self.xexp
    }

    pub fn yexp(&self) -> &[u64] {
        &self.yexp
    }

    pub fn degree(&self) -> u64 {
        self.xexp.iter().sum::<u64>() + self.yexp.iter().sum::<u64>()
    }

    pub fn exponent(&self, var: Var) -> u64 {
        match var {
            Var::X(i) => self.xexp[i],
            Var::Y(j) => self.yexp[j],
        }
    }

    /// Both blocks sorted descending.
    pub fn is_symmetrized(&self) -> bool {
        is_sorted_desc(&self.xexp) && is_sorted_desc(&self.yexp)
    }

    /// Sorts each block descending: the canonical orbit representative,
    /// and the lex-greatest monomial of the orbit.
    pub fn symmetrize(&self) -> Monomial {
        let mut x = self.xexp.clone();
        let mut y = self.yexp.clone();
        x.sort_unstable_by(|a, b| b.cmp(a));
        y.sort_unstable_by(|a, b| b.cmp(a));
        Monomial { xexp: x, yexp: y }
    }

    fn fits(&self, ctx: &Context) -> bool {
        self.xexp.len() == ctx.m && self.yexp.len() == ctx.n
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in self.xexp.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^({})", i + 1, e)),
            }
        }
        for (j, &e) in self.yexp.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("y{}", j + 1)),
                _ => parts.push(format!("y{}^({})", j + 1, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub fn is_sorted_desc(v: &[u64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Lexicographic comparison, x exponents first. Same as `Ord` on
/// `Monomial`; exposed as a named operation since leading-term reasoning
/// leans on it everywhere.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    debug_assert_eq!(a.xexp.len(), b.xexp.len());
    debug_assert_eq!(a.yexp.len(), b.yexp.len());
    a.cmp(b)
}

/// A finitely supported coefficient map in a fixed context. Stored
/// coefficients are nonzero residues in [1, p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    ctx: Context,
    terms: BTreeMap<Monomial, u64>,
}

impl Element {
    pub fn zero(ctx: Context) -> Self {
        Element { ctx, terms: BTreeMap::new() }
    }

    /// The unit 1, carried by the all-zero monomial.
    pub fn one(ctx: Context) -> Self {
        Element::from_monomial(ctx, Monomial::constant(ctx.m, ctx.n), 1)
    }

    pub fn from_monomial(ctx: Context, mono: Monomial, coeff: i128) -> Self {
        assert!(mono.fits(&ctx), "monomial shape does not match context");
        let c = ctx.scalar(coeff);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c.value());
        }
        Element { ctx, terms }
    }

    pub fn from_terms<I>(ctx: Context, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i128)>,
    {
        let mut out = Element::zero(ctx);
        for (mono, c) in iter {
            out.add_term(mono, ctx.scalar(c));
        }
        out
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> FpScalar {
        FpScalar::from_u64(self.terms.get(mono).copied().unwrap_or(0), self.ctx.p)
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FpScalar)> {
        self.terms
            .iter()
            .map(|(m, &c)| (m, FpScalar::from_u64(c, self.ctx.p)))
    }

    /// Terms in decreasing lex order, the canonical presentation.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, FpScalar)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, &c)| (m, FpScalar::from_u64(c, self.ctx.p)))
    }

    fn add_term(&mut self, mono: Monomial, c: FpScalar) {
        debug_assert!(mono.fits(&self.ctx));
        if c.is_zero() {
            return;
        }
        let p = self.ctx.p;
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.value());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = FpScalar::from_u64(*e.get(), p) + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum.value();
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        let mut out = self.clone();
        for (mono, c) in other.terms() {
            out.add_term(mono.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        let mut out = Element::zero(self.ctx);
        for (mono, c) in self.terms() {
            out.add_term(mono.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: FpScalar) -> Element {
        let mut out = Element::zero(self.ctx);
        for (mono, v) in self.terms() {
            out.add_term(mono.clone(), v * c);
        }
        out
    }

    /// Bilinear product. A term with a base-p carry in any variable drops
    /// out through the vanishing binomial.
    pub fn mul(&self, other: &Element) -> Element {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        let p = self.ctx.p;
        let mut out = Element::zero(self.ctx);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let mut c = ca * cb;
                if c.is_zero() {
                    continue;
                }
                let mut xexp = Vec::with_capacity(self.ctx.m);
                for (&a, &b) in ma.xexp.iter().zip(&mb.xexp) {
                    c = c * arith::binom_mod_p(a + b, a, p);
                    if c.is_zero() {
                        break;
                    }
                    xexp.push(a.checked_add(b).expect("exponent overflow"));
                }
                if c.is_zero() {
                    continue;
                }
                let mut yexp = Vec::with_capacity(self.ctx.n);
                for (&a, &b) in ma.yexp.iter().zip(&mb.yexp) {
                    c = c * arith::binom_mod_p(a + b, a, p);
                    if c.is_zero() {
                        break;
                    }
                    yexp.push(a.checked_add(b).expect("exponent overflow"));
                }
                if c.is_zero() {
                    continue;
                }
                out.add_term(Monomial::new(xexp, yexp), c);
            }
        }
        out
    }

    /// Derivation d/dvar: on a monomial it lowers the chosen exponent by
    /// one with coefficient 1 (divided powers; ordinary powers would pick
    /// up the exponent as a factor).
    pub fn derive(&self, var: Var) -> Element {
        match var {
            Var::X(i) => assert!(i < self.ctx.m, "no such x variable"),
            Var::Y(j) => assert!(j < self.ctx.n, "no such y variable"),
        }
        let mut out = Element::zero(self.ctx);
        for (mono, c) in self.terms() {
            let e = mono.exponent(var);
            if e == 0 {
                continue;
            }
            let mut m2 = mono.clone();
            match var {
                Var::X(i) => m2.xexp[i] = e - 1,
                Var::Y(j) => m2.yexp[j] = e - 1,
            }
            out.add_term(m2, c);
        }
        out
    }

    /// Multiplication by (x1 - y1), the witness side of the membership
    /// equation.
    pub fn mul_x1_minus_y1(&self) -> Element {
        assert!(self.ctx.m >= 1 && self.ctx.n >= 1, "needs both x1 and y1");
        let mut x1 = Monomial::constant(self.ctx.m, self.ctx.n);
        x1.xexp[0] = 1;
        let mut y1 = Monomial::constant(self.ctx.m, self.ctx.n);
        y1.yexp[0] = 1;
        let gen = Element::from_terms(self.ctx, [(x1, 1), (y1, -1)]);
        gen.mul(self)
    }

    pub fn leading_term(&self) -> Result<(Monomial, FpScalar), Error> {
        let (mono, &c) = self.terms.last_key_value().ok_or(Error::ZeroElement)?;
        Ok((mono.clone(), FpScalar::from_u64(c, self.ctx.p)))
    }

    /// Degree when homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u64, Element> {
        let mut out: BTreeMap<u64, Element> = BTreeMap::new();
        for (mono, c) in self.terms() {
            out.entry(mono.degree())
                .or_insert_with(|| Element::zero(self.ctx))
                .add_term(mono.clone(), c);
        }
        out
    }

    /// Relabels variables: new x_i carries the exponent of old
    /// x_{xperm[i]}, and likewise for y.
    pub fn permute_vars(&self, xperm: &[usize], yperm: &[usize]) -> Element {
        assert_eq!(xperm.len(), self.ctx.m);
        assert_eq!(yperm.len(), self.ctx.n);
        let mut out = Element::zero(self.ctx);
        for (mono, c) in self.terms() {
            let xexp: Vec<u64> = xperm.iter().map(|&i| mono.xexp[i]).collect();
            let yexp: Vec<u64> = yperm.iter().map(|&j| mono.yexp[j]).collect();
            out.add_term(Monomial::new(xexp, yexp), c);
        }
        out
    }

    /// Freezes some variables at fixed exponents and collects the
    /// cofactor in the smaller context, remaining variables relabeled in
    /// order.
    pub fn slice(&self, fixed: &[(Var, u64)]) -> Result<Element, Error> {
        let mut fx: BTreeMap<usize, u64> = BTreeMap::new();
        let mut fy: BTreeMap<usize, u64> = BTreeMap::new();
        for &(var, e) in fixed {
            let clash = match var {
                Var::X(i) => {
                    if i >= self.ctx.m {
                        return Err(Error::BadSlice(format!("no x{} in context", i + 1)));
                    }
                    fx.insert(i, e).is_some()
                }
                Var::Y(j) => {
                    if j >= self.ctx.n {
                        return Err(Error::BadSlice(format!("no y{} in context", j + 1)));
                    }
                    fy.insert(j, e).is_some()
                }
            };
            if clash {
                return Err(Error::BadSlice("variable frozen twice".into()));
            }
        }
        let m2 = self.ctx.m - fx.len();
        let n2 = self.ctx.n - fy.len();
        let ctx2 = Context::new(self.ctx.p, m2, n2).map_err(|_| {
            Error::BadSlice("slice would freeze every variable".into())
        })?;
        let mut out = Element::zero(ctx2);
        'terms: for (mono, c) in self.terms() {
            for (&i, &e) in &fx {
                if mono.xexp[i] != e {
                    continue 'terms;
                }
            }
            for (&j, &e) in &fy {
                if mono.yexp[j] != e {
                    continue 'terms;
                }
            }
            let xexp: Vec<u64> = (0..self.ctx.m)
                .filter(|i| !fx.contains_key(i))
                .map(|i| mono.xexp[i])
                .collect();
            let yexp: Vec<u64> = (0..self.ctx.n)
                .filter(|j| !fy.contains_key(j))
                .map(|j| mono.yexp[j])
                .collect();
            out.add_term(Monomial::new(xexp, yexp), c);
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms_desc()
            .map(|(mono, c)| {
                if mono.degree() == 0 {
                    format!("{}", c.value())
                } else if c.value() == 1 {
                    mono.to_string()
                } else {
                    format!("{}*{}", c.value(), mono)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// All distinct permutations of a slice, each exactly once.
pub(crate) fn distinct_permutations(values: &[u64]) -> Vec<Vec<u64>> {
    let mut cur: Vec<u64> = values.to_vec();
    cur.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Sum over the distinct permutation orbit of a sorted exponent pair, all
/// coefficients 1. Repeated exponents do not inflate coefficients: each
/// distinct monomial appears once. This is f_{a1..am} for a pure x tuple,
/// g_{b1..bn} for a pure y tuple, and their product in general.
pub fn orbit_sum(ctx: Context, xexp: &[u64], yexp: &[u64]) -> Result<Element, Error> {
    if !is_sorted_desc(xexp) {
        return Err(Error::Unsorted(xexp.to_vec()));
    }
    if !is_sorted_desc(yexp) {
        return Err(Error::Unsorted(yexp.to_vec()));
    }
    assert_eq!(xexp.len(), ctx.m(), "x exponent count");
    assert_eq!(yexp.len(), ctx.n(), "y exponent count");
    let mut out = Element::zero(ctx);
    for xs in distinct_permutations(xexp) {
        for ys in distinct_permutations(yexp) {
            out.add_term(Monomial::new(xs.clone(), ys), FpScalar::one(ctx.p()));
        }
    }
    Ok(out)
}

/// i-th elementary symmetric polynomial in the x block.
pub fn elementary_sigma(ctx: Context, i: usize) -> Result<Element, Error> {
    if i > ctx.m() {
        return Err(Error::BadFamily(format!("sigma_{i} needs at least {i} x variables")));
    }
    let mut exps = vec![0u64; ctx.m()];
    for e in exps.iter_mut().take(i) {
        *e = 1;
    }
    orbit_sum(ctx, &exps, &vec![0; ctx.n()])
}

/// Complete homogeneous symmetric polynomial p_j in the y block, written
/// in divided-power coordinates: y^j1..yn^jn = (j1!..jn!) y^(j1)..y^(jn),
/// so the monomial y^(j) carries j1!..jn! reduced mod p.
pub fn complete_h(ctx: Context, j: u64) -> Element {
    let p = ctx.p();
    let mut out = Element::zero(ctx);
    for comp in compositions(j, ctx.n()) {
        let mut c = FpScalar::one(p);
        for &part in &comp {
            c = c * arith::factorial_mod_p(part, p);
        }
        out.add_term(Monomial::new(vec![0; ctx.m()], comp), c);
    }
    out
}

/// All compositions of `total` into `parts` nonnegative ordered parts.
pub(crate) fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u64; parts];
    fn rec(total: u64, idx: usize, parts: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if idx == parts - 1 {
            cur[idx] = total;
            out.push(cur.clone());
            return;
        }
        for v in 0..=total {
            cur[idx] = v;
            rec(total - v, idx + 1, parts, cur, out);
        }
    }
    rec(total, 0, parts, &mut cur, &mut out);
    out
}

/// Partitions of `total` into at most `parts` parts, padded with zeros to
/// length `parts`, sorted descending.
pub(crate) fn partitions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(total: u64, slots: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = max.min(total);
        // allow zero even when total > 0 only if remaining slots could... parts are sorted
        // descending, so once a zero is placed everything after is zero.
        for v in (0..=hi).rev() {
            cur.push(v);
            if v == 0 {
                if total == 0 {
                    let mut full = cur.clone();
                    full.resize(cur.len() + slots - 1, 0);
                    out.push(full);
                }
                cur.pop();
                break;
            }
            rec(total - v, slots - 1, v, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(total, parts, total, &mut Vec::new(), &mut out);
    out
}

/// Minimal valuation d_k: the least v_p(j1!..jn!) over compositions of k
/// into n parts.
pub fn d_min(k: u64, n: usize, p: u64) -> u64 {
    assert!(n >= 1, "d_min needs at least one y variable");
    partitions(k, n)
        .iter()
        .map(|part| part.iter().map(|&j| arith::factorial_valuation(j, p)).sum())
        .min()
        .expect("n >= 1 so some composition exists")
}

/// The lex-greatest y monomial of degree k whose factorial product has the
/// minimal valuation d_k; this is the y part of the leading term of E_{m+k}.
pub fn ell_y(k: u64, n: usize, p: u64) -> Vec<u64> {
    let d = d_min(k, n, p);
    partitions(k, n)
        .into_iter()
        .filter(|part| {
            part.iter().map(|&j| arith::factorial_valuation(j, p)).sum::<u64>() == d
        })
        .max()
        .expect("some partition attains the minimum")
}

/// Alternative reading of the highest-term rule, selecting by the
/// multinomial C(k; j1..jn) not being divisible by p^(d_k + 1). Differs
/// from `ell_y` by the valuation of k!; kept so the discrepancy can be
/// reported rather than silently resolved.
pub fn ell_y_multinomial(k: u64, n: usize, p: u64) -> Option<Vec<u64>> {
    let d = d_min(k, n, p);
    let vk = arith::factorial_valuation(k, p);
    partitions(k, n)
        .into_iter()
        .filter(|part| {
            let dj: u64 = part.iter().map(|&j| arith::factorial_valuation(j, p)).sum();
            vk - dj <= d
        })
        .max()
}

/// The supersymmetric element E_t obtained from the alternating sum
/// C_t = sum (-1)^(t-i) sigma_i(x) p_(t-i)(y), computed over exact
/// integers, divided by p^(d_(t-m)) when t > m, then reduced mod p.
pub fn e_element(ctx: Context, t: u64) -> Result<Element, Error> {
    if t == 0 {
        return Err(Error::BadFamily("E_t needs t >= 1".into()));
    }
    let m = ctx.m() as u64;
    if t > m && ctx.n() == 0 {
        return Err(Error::BadFamily(format!("E_{t} needs y variables when t > m")));
    }
    let mut coeffs: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    let top = t.min(m) as usize;
    for i in 0..=top {
        let sign = if (t - i as u64) % 2 == 0 { 1 } else { -1 };
        let xparts = distinct_permutations(
            &(0..ctx.m()).map(|u| if u < i { 1u64 } else { 0 }).collect::<Vec<_>>(),
        );
        for comp in compositions(t - i as u64, ctx.n()) {
            let mut c = BigInt::from(sign);
            for &part in &comp {
                c *= big_factorial(part);
            }
            for xs in &xparts {
                let mono = Monomial::new(xs.clone(), comp.clone());
                *coeffs.entry(mono).or_insert_with(BigInt::zero) += &c;
            }
        }
    }
    if t > m {
        let d = d_min(t - m, ctx.n(), ctx.p());
        let divisor = BigInt::from(ctx.p()).pow(d as u32);
        for (mono, c) in coeffs.iter_mut() {
            if c.is_zero() {
                continue;
            }
            let (q, r) = (&*c / &divisor, &*c % &divisor);
            assert!(r.is_zero(), "coefficient of {mono} not divisible by p^d");
            *c = q;
        }
    }
    let big_p = BigInt::from(ctx.p());
    let mut out = Element::zero(ctx);
    for (mono, c) in coeffs {
        let mut r = &c % &big_p;
        if r.is_negative() {
            r += &big_p;
        }
        let v: u64 = r.try_into().expect("residue fits u64");
        out.add_term(mono, FpScalar::from_u64(v, ctx.p()));
    }
    if out.is_zero() {
        return Err(Error::PostconditionFailed(format!("E_{t} reduced to zero")));
    }
    Ok(out)
}

fn big_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, m: usize, n: usize) -> Context {
        Context::new(p, m, n).unwrap()
    }

    fn mono(x: &[u64], y: &[u64]) -> Monomial {
        Monomial::new(x.to_vec(), y.to_vec())
    }

    fn elem(c: Context, terms: &[(&[u64], &[u64], i128)]) -> Element {
        Element::from_terms(
            c,
            terms.iter().map(|&(x, y, v)| (mono(x, y), v)),
        )
    }

    #[test]
    fn multiply_same_variable() {
        let c = ctx(3, 1, 1);
        let x1 = elem(c, &[(&[1], &[0], 1)]);
        let sq = x1.mul(&x1);
        assert_eq!(sq, elem(c, &[(&[2], &[0], 2)]));
        // C(3,1) = 3 = 0: a base-3 carry kills the product
        let x2 = elem(c, &[(&[2], &[0], 1)]);
        assert!(x1.mul(&x2).is_zero());
    }

    #[test]
    fn multiply_disjoint_variables() {
        let c = ctx(3, 2, 1);
        let f = elem(c, &[(&[1, 0], &[2], 1)]);
        let g = elem(c, &[(&[0, 1], &[0], 1)]);
        assert_eq!(f.mul(&g), elem(c, &[(&[1, 1], &[2], 1)]));
    }

    #[test]
    fn derive_examples() {
        let c = ctx(3, 1, 1);
        let f = elem(c, &[(&[3], &[0], 1)]);
        assert_eq!(f.derive(Var::X(0)), elem(c, &[(&[2], &[0], 1)]));
        let g = elem(c, &[(&[2], &[2], 1)]);
        assert_eq!(g.derive(Var::Y(0)), elem(c, &[(&[2], &[1], 1)]));
        let h = elem(c, &[(&[0], &[5], 1)]);
        assert!(h.derive(Var::X(0)).is_zero());
        // divided powers: d/dx x^(p) = x^(p-1), not 0
        let f = elem(c, &[(&[3], &[0], 1)]);
        assert_eq!(f.derive(Var::X(0)).coeff(&mono(&[2], &[0])).value(), 1);
    }

    #[test]
    fn mul_x1_minus_y1_examples() {
        let c = ctx(3, 1, 1);
        let f = elem(c, &[(&[0], &[1], 1)]);
        // (x - y) y = x y - 2 y^(2)
        assert_eq!(f.mul_x1_minus_y1(), elem(c, &[(&[1], &[1], 1), (&[0], &[2], -2)]));
        let one = Element::one(c);
        assert_eq!(one.mul_x1_minus_y1(), elem(c, &[(&[1], &[0], 1), (&[0], &[1], -1)]));
        let x = elem(c, &[(&[1], &[0], 1)]);
        assert_eq!(x.mul_x1_minus_y1(), elem(c, &[(&[2], &[0], 2), (&[1], &[1], -1)]));
    }

    #[test]
    fn lex_and_leading() {
        assert!(mono(&[3], &[0]) > mono(&[0], &[3]));
        assert!(mono(&[2], &[1]) > mono(&[2], &[0]));
        assert!(mono(&[1, 2], &[]) < mono(&[2, 1], &[]));

        let c = ctx(3, 1, 1);
        let f = elem(c, &[(&[0], &[3], 1), (&[3], &[0], -1)]);
        let (lt, cf) = f.leading_term().unwrap();
        assert_eq!(lt, mono(&[3], &[0]));
        assert_eq!(cf.value(), 2);
        assert!(Element::zero(c).leading_term().is_err());

        let c2 = ctx(3, 2, 0);
        let g = elem(c2, &[(&[1, 1], &[], 1), (&[2, 0], &[], 1)]);
        assert_eq!(g.leading_term().unwrap().0, mono(&[2, 0], &[]));
    }

    #[test]
    fn symmetrize_monomial() {
        assert_eq!(mono(&[1, 2], &[0, 3]).symmetrize(), mono(&[2, 1], &[3, 0]));
        assert_eq!(mono(&[2, 1], &[3, 0]).symmetrize(), mono(&[2, 1], &[3, 0]));
        assert_eq!(mono(&[0, 0], &[5, 5]).symmetrize(), mono(&[0, 0], &[5, 5]));
    }

    #[test]
    fn orbit_sums() {
        let c = ctx(3, 2, 0);
        let f21 = orbit_sum(c, &[2, 1], &[]).unwrap();
        assert_eq!(f21, elem(c, &[(&[2, 1], &[], 1), (&[1, 2], &[], 1)]));
        let f11 = orbit_sum(c, &[1, 1], &[]).unwrap();
        assert_eq!(f11, elem(c, &[(&[1, 1], &[], 1)]));
        let cy = ctx(3, 0, 2);
        let g30 = orbit_sum(cy, &[], &[3, 0]).unwrap();
        assert_eq!(g30, elem(cy, &[(&[], &[3, 0], 1), (&[], &[0, 3], 1)]));
        assert!(orbit_sum(c, &[1, 2], &[]).is_err());
    }

    #[test]
    fn sigma_and_complete() {
        let c = ctx(3, 2, 1);
        assert_eq!(elementary_sigma(c, 2).unwrap(), elem(c, &[(&[1, 1], &[0], 1)]));
        assert!(elementary_sigma(c, 3).is_err());
        let c11 = ctx(3, 1, 1);
        assert_eq!(complete_h(c11, 2), elem(c11, &[(&[0], &[2], 2)]));
        // 3! = 0 mod 3
        assert!(complete_h(c11, 3).is_zero());
    }

    #[test]
    fn e_element_small() {
        let c = ctx(3, 1, 1);
        let e2 = e_element(c, 2).unwrap();
        assert_eq!(e2, elem(c, &[(&[0], &[2], 2), (&[1], &[1], 2)]));
        assert_eq!(e2.leading_term().unwrap().0, mono(&[1], &[1]));

        let e4 = e_element(c, 4).unwrap();
        assert_eq!(e4.leading_term().unwrap().0, mono(&[1], &[3]));

        let c22 = ctx(3, 2, 2);
        let e2 = e_element(c22, 2).unwrap();
        let sigma2 = elementary_sigma(c22, 2).unwrap();
        let s1p1 = elementary_sigma(c22, 1).unwrap().mul(&complete_h(c22, 1));
        let expect = sigma2.sub(&s1p1).add(&complete_h(c22, 2));
        assert_eq!(e2, expect);
        assert_eq!(e2.leading_term().unwrap().0, mono(&[1, 1], &[0, 0]));
    }

    #[test]
    fn ell_examples() {
        // n = 1: the only composition
        assert_eq!(ell_y(3, 1, 3), vec![3]);
        // n = 2, k = 3: (3,0) has valuation 1, (2,1) has 0
        assert_eq!(d_min(3, 2, 3), 0);
        assert_eq!(ell_y(3, 2, 3), vec![2, 1]);
        // the multinomial reading picks (3,0) here: that is the reported
        // discrepancy between the two normalizations
        assert_eq!(ell_y_multinomial(3, 2, 3), Some(vec![3, 0]));
    }

    #[test]
    fn slice_examples() {
        let c = ctx(3, 2, 1);
        let f = elem(c, &[(&[1, 1], &[2], 1), (&[2, 0], &[2], 1)]);
        let s = f.slice(&[(Var::X(1), 1)]).unwrap();
        let c11 = ctx(3, 1, 1);
        assert_eq!(s, elem(c11, &[(&[1], &[2], 1)]));
        let none = f.slice(&[(Var::X(1), 5)]).unwrap();
        assert!(none.is_zero());
        let same = f.slice(&[]).unwrap();
        assert_eq!(same, f);
        assert!(f.slice(&[(Var::X(0), 0), (Var::X(1), 0), (Var::Y(0), 0)]).is_err());
    }

    #[test]
    fn homogeneity_and_components() {
        let c = ctx(3, 1, 1);
        let f = elem(c, &[(&[1], &[0], 1), (&[1], &[1], 1)]);
        assert!(!f.is_homogeneous());
        let comps = f.homogeneous_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&1], elem(c, &[(&[1], &[0], 1)]));
        assert_eq!(comps[&2], elem(c, &[(&[1], &[1], 1)]));
    }

    #[test]
    fn render_monomials_and_elements() {
        assert_eq!(mono(&[2, 1], &[3, 0]).to_string(), "x1^(2)*x2*y1^(3)");
        assert_eq!(mono(&[0, 0], &[0, 0]).to_string(), "1");
        let c = ctx(3, 1, 1);
        let f = elem(c, &[(&[1], &[1], 1), (&[0], &[2], 2), (&[0], &[0], 2)]);
        assert_eq!(f.to_string(), "x1*y1 + 2*y1^(2) + 2");
        assert_eq!(Element::zero(c).to_string(), "0");
    }

    #[test]
    fn distinct_permutation_count() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[5, 5]).len(), 1);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    #[test]
    fn composition_and_partition_counts() {
        assert_eq!(compositions(4, 2).len(), 5);
        assert_eq!(compositions(0, 0).len(), 1);
        assert_eq!(compositions(2, 0).len(), 0);
        assert_eq!(partitions(3, 2), vec![vec![3, 0], vec![2, 1]]);
        assert_eq!(partitions(3, 3).len(), 3);
        assert_eq!(partitions(0, 2), vec![vec![0, 0]]);
    }
}
