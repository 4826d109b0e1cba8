//! The supersymmetry engine.
//!
//! Ground truth is the witness oracle: f is supersymmetric iff it is
//! symmetric in each variable block and (d/dx1 + d/dy1) f = (x1 - y1) f'
//! is solvable for f'. The per-degree linear characterization (built in
//! `defining_system`) is validated against the oracle rather than trusted;
//! its equation ranges are easy to get off by one.

use std::collections::BTreeMap;

use crate::arith::{binom_mod_p, FpScalar};
use crate::divalg::{compositions, orbit_sum, Context, Element, Monomial, Var};
use crate::error::Error;
use crate::fplin::{EchelonBasis, FpMatrix};

/// All monomials of one degree, in decreasing lex order, plus the
/// symmetrized (orbit representative) sublist.
#[derive(Debug, Clone)]
pub struct DegreeBlock {
    ctx: Context,
    degree: u64,
    monomials: Vec<Monomial>,
    symmetrized: Vec<Monomial>,
}

impl DegreeBlock {
    pub fn new(ctx: Context, degree: u64) -> Self {
        let m = ctx.m();
        let n = ctx.n();
        let mut monomials: Vec<Monomial> = compositions(degree, m + n)
            .into_iter()
            .map(|c| Monomial::new(c[..m].to_vec(), c[m..].to_vec()))
            .collect();
        monomials.sort_unstable_by(|a, b| b.cmp(a));
        let symmetrized: Vec<Monomial> = monomials
            .iter()
            .filter(|mo| mo.is_symmetrized())
            .cloned()
            .collect();
        DegreeBlock { ctx, degree, monomials, symmetrized }
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Full monomial list, decreasing lex; C(k+m+n-1, m+n-1) entries.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Orbit representatives, decreasing lex.
    pub fn symmetrized(&self) -> &[Monomial] {
        &self.symmetrized
    }
}

fn index_map(monos: &[Monomial]) -> BTreeMap<Monomial, usize> {
    monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Fixed by every adjacent transposition of the x block and of the y
/// block separately.
pub fn is_symmetric(f: &Element) -> bool {
    let ctx = f.context();
    let (m, n) = (ctx.m(), ctx.n());
    let idx: Vec<usize> = (0..m).collect();
    let idy: Vec<usize> = (0..n).collect();
    for i in 0..m.saturating_sub(1) {
        let mut perm = idx.clone();
        perm.swap(i, i + 1);
        if f.permute_vars(&perm, &idy) != *f {
            return false;
        }
    }
    for j in 0..n.saturating_sub(1) {
        let mut perm = idy.clone();
        perm.swap(j, j + 1);
        if f.permute_vars(&idx, &perm) != *f {
            return false;
        }
    }
    true
}

/// Membership oracle. Returns the witness f' with
/// (d/dx1 + d/dy1) f = (x1 - y1) f' when f is supersymmetric, None
/// otherwise. Inhomogeneous input is split into homogeneous components
/// and each is tested separately; witnesses add up.
///
/// With an empty x or y block the witness equation has no content and
/// supersymmetric just means symmetric; the witness is then 0.
pub fn oracle_supersymmetric(f: &Element) -> Option<Element> {
    if !is_symmetric(f) {
        return None;
    }
    let ctx = f.context();
    if ctx.m() == 0 || ctx.n() == 0 {
        return Some(Element::zero(ctx));
    }
    let mut witness = Element::zero(ctx);
    for (k, comp) in f.homogeneous_components() {
        witness = witness.add(&component_witness(&comp, k)?);
    }
    Some(witness)
}

fn component_witness(f: &Element, k: u64) -> Option<Element> {
    let ctx = f.context();
    let p = ctx.p();
    let rhs_elt = f.derive(Var::X(0)).add(&f.derive(Var::Y(0)));
    if k < 2 {
        return rhs_elt.is_zero().then(|| Element::zero(ctx));
    }
    let eqs = DegreeBlock::new(ctx, k - 1);
    let unknowns = DegreeBlock::new(ctx, k - 2);
    let ucols = index_map(unknowns.monomials());
    let mut mat = FpMatrix::new(p, unknowns.monomials().len());
    let mut rhs = Vec::with_capacity(eqs.monomials().len());
    for nmono in eqs.monomials() {
        let mut entries: Vec<(usize, u64)> = Vec::new();
        // (x1 - y1) u = (u_x1 + 1) * (u + e_x1) - (u_y1 + 1) * (u + e_y1)
        if nmono.xexp()[0] >= 1 {
            let mut u = nmono.clone();
            let mut x = u.xexp().to_vec();
            x[0] -= 1;
            u = Monomial::new(x, u.yexp().to_vec());
            entries.push((ucols[&u], nmono.xexp()[0] % p));
        }
        if nmono.yexp()[0] >= 1 {
            let mut y = nmono.yexp().to_vec();
            y[0] -= 1;
            let u = Monomial::new(nmono.xexp().to_vec(), y);
            let c = FpScalar::new(-((nmono.yexp()[0] % p) as i128), p);
            if !c.is_zero() {
                entries.push((ucols[&u], c.value()));
            }
        }
        mat.push_row_sparse(&entries);
        rhs.push(rhs_elt.coeff(nmono).value());
    }
    let sol = mat.solve(&rhs).expect("rhs length matches").map(|x| {
        Element::from_terms(
            ctx,
            unknowns
                .monomials()
                .iter()
                .zip(&x)
                .filter(|(_, &c)| c != 0)
                .map(|(mono, &c)| (mono.clone(), c as i128)),
        )
    })?;
    Some(sol)
}

/// The defining linear system of one degree block, on symmetrized orbit
/// coordinates (columns = `block.symmetrized()` in decreasing lex order;
/// the permutation equations are absorbed by the coordinate choice).
///
/// For every frozen tail (i2..im | j2..jn) and t = k - |tail| = p*l + s:
/// when s > 0, the rows sum_{j=0..s} C(s,j) a_{t-p*r-j, tail, p*r+j} = 0
/// for r = 0..l; when s = 0, the chain rows a_{t-p*r, tail, p*r} +
/// a_{t-p*(r+1), tail, p*(r+1)} = 0 for r = 0..l-1.
pub fn defining_system(block: &DegreeBlock) -> FpMatrix {
    let ctx = block.context();
    assert!(ctx.m() >= 1 && ctx.n() >= 1, "needs both variable blocks");
    let p = ctx.p();
    let k = block.degree();
    let cols = index_map(block.symmetrized());
    let mut mat = FpMatrix::new(p, block.symmetrized().len());
    for xtail in sorted_tails(ctx.m() - 1, k) {
        let xsum: u64 = xtail.iter().sum();
        for ytail in sorted_tails(ctx.n() - 1, k - xsum) {
            let ysum: u64 = ytail.iter().sum();
            let t = k - xsum - ysum;
            if t == 0 {
                continue;
            }
            let s = t % p;
            let l = t / p;
            let class_col = |i1: u64, j1: u64| -> usize {
                let mut x = vec![i1];
                x.extend_from_slice(&xtail);
                let mut y = vec![j1];
                y.extend_from_slice(&ytail);
                cols[&Monomial::new(x, y).symmetrize()]
            };
            if s > 0 {
                for r in 0..=l {
                    let entries: Vec<(usize, u64)> = (0..=s)
                        .map(|j| {
                            (class_col(t - p * r - j, p * r + j), binom_mod_p(s, j, p).value())
                        })
                        .collect();
                    mat.push_row_sparse(&entries);
                }
            } else {
                for r in 0..l {
                    let entries = vec![
                        (class_col(t - p * r, p * r), 1),
                        (class_col(t - p * (r + 1), p * (r + 1)), 1),
                    ];
                    mat.push_row_sparse(&entries);
                }
            }
        }
    }
    mat
}

/// Full-coordinate variant for cross-validation: the same block rows for
/// every (ordered) tail, on all monomials, plus explicit symmetry rows
/// a_M - a_(sM) = 0 for adjacent transpositions s.
pub fn defining_system_full(block: &DegreeBlock) -> FpMatrix {
    let ctx = block.context();
    assert!(ctx.m() >= 1 && ctx.n() >= 1, "needs both variable blocks");
    let p = ctx.p();
    let k = block.degree();
    let cols = index_map(block.monomials());
    let mut mat = FpMatrix::new(p, block.monomials().len());
    for xtail in compositions_up_to(ctx.m() - 1, k) {
        let xsum: u64 = xtail.iter().sum();
        for ytail in compositions_up_to(ctx.n() - 1, k - xsum) {
            let ysum: u64 = ytail.iter().sum();
            let t = k - xsum - ysum;
            if t == 0 {
                continue;
            }
            let s = t % p;
            let l = t / p;
            let full_col = |i1: u64, j1: u64| -> usize {
                let mut x = vec![i1];
                x.extend_from_slice(&xtail);
                let mut y = vec![j1];
                y.extend_from_slice(&ytail);
                cols[&Monomial::new(x, y)]
            };
            if s > 0 {
                for r in 0..=l {
                    let entries: Vec<(usize, u64)> = (0..=s)
                        .map(|j| {
                            (full_col(t - p * r - j, p * r + j), binom_mod_p(s, j, p).value())
                        })
                        .collect();
                    mat.push_row_sparse(&entries);
                }
            } else {
                for r in 0..l {
                    let entries = vec![
                        (full_col(t - p * r, p * r), 1),
                        (full_col(t - p * (r + 1), p * (r + 1)), 1),
                    ];
                    mat.push_row_sparse(&entries);
                }
            }
        }
    }
    // symmetry rows
    for mono in block.monomials() {
        for i in 0..ctx.m().saturating_sub(1) {
            let mut x = mono.xexp().to_vec();
            x.swap(i, i + 1);
            let other = Monomial::new(x, mono.yexp().to_vec());
            if other != *mono {
                mat.push_row_sparse(&[(cols[mono], 1), (cols[&other], p - 1)]);
            }
        }
        for j in 0..ctx.n().saturating_sub(1) {
            let mut y = mono.yexp().to_vec();
            y.swap(j, j + 1);
            let other = Monomial::new(mono.xexp().to_vec(), y);
            if other != *mono {
                mat.push_row_sparse(&[(cols[mono], 1), (cols[&other], p - 1)]);
            }
        }
    }
    mat
}

/// Sorted-descending tuples of the given length with sum <= max_sum:
/// the distinct frozen tails, one per permutation orbit.
fn sorted_tails(len: usize, max_sum: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for total in 0..=max_sum {
        out.extend(crate::divalg::partitions(total, len));
    }
    if len == 0 {
        // partitions(0, 0) contributed the single empty tail; drop dups
        out.truncate(1);
    }
    out
}

fn compositions_up_to(len: usize, max_sum: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for total in 0..=max_sum {
        out.extend(compositions(total, len));
    }
    if len == 0 {
        out.truncate(1);
    }
    out
}

/// Echelonized basis of the degree-k supersymmetric elements, on
/// symmetrized orbit coordinates ordered by decreasing lex. The pivot
/// monomials are exactly the realizable leading terms (the marked
/// monomials) of the degree.
///
/// With n = 0 (or m = 0) the space degenerates to the symmetric elements
/// and every orbit sum is a basis vector.
pub struct SkBasis {
    block: DegreeBlock,
    basis: EchelonBasis,
}

pub fn basis_sk(ctx: Context, k: u64) -> SkBasis {
    let block = DegreeBlock::new(ctx, k);
    let ncols = block.symmetrized().len();
    let basis = if ctx.m() == 0 || ctx.n() == 0 {
        let rows: Vec<Vec<u64>> = (0..ncols)
            .map(|i| {
                let mut v = vec![0u64; ncols];
                v[i] = 1;
                v
            })
            .collect();
        EchelonBasis::from_vectors(ctx.p(), ncols, &rows).expect("identity rows")
    } else {
        let system = defining_system(&block);
        let nullspace = system.nullspace();
        EchelonBasis::from_vectors(ctx.p(), ncols, &nullspace).expect("equal lengths")
    };
    SkBasis { block, basis }
}

impl SkBasis {
    pub fn context(&self) -> Context {
        self.block.context()
    }

    pub fn degree(&self) -> u64 {
        self.block.degree()
    }

    pub fn block(&self) -> &DegreeBlock {
        &self.block
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    /// Orbit coordinate labels, decreasing lex.
    pub fn columns(&self) -> &[Monomial] {
        self.block.symmetrized()
    }

    /// Pivot monomials of the echelon basis: the marked monomials.
    pub fn pivots(&self) -> Vec<Monomial> {
        self.basis
            .pivot_columns()
            .iter()
            .map(|&c| self.block.symmetrized()[c].clone())
            .collect()
    }

    pub fn element_from_coords(&self, coords: &[u64]) -> Element {
        let ctx = self.block.context();
        let mut out = Element::zero(ctx);
        for (mono, &c) in self.block.symmetrized().iter().zip(coords) {
            if c % ctx.p() != 0 {
                let orbit = orbit_sum(ctx, mono.xexp(), mono.yexp()).expect("sorted rep");
                out = out.add(&orbit.scale(FpScalar::from_u64(c, ctx.p())));
            }
        }
        out
    }

    pub fn elements(&self) -> Vec<Element> {
        self.basis
            .rows()
            .iter()
            .map(|row| self.element_from_coords(row))
            .collect()
    }

    /// Orbit coordinates of a symmetric homogeneous element of this
    /// degree (the zero element counts).
    pub fn coords_of(&self, f: &Element) -> Result<Vec<u64>, Error> {
        if !f.is_zero() {
            if f.homogeneous_degree() != Some(self.block.degree()) {
                return Err(Error::NotHomogeneous);
            }
            if !is_symmetric(f) {
                return Err(Error::PostconditionFailed("element is not symmetric".into()));
            }
        }
        Ok(self
            .block
            .symmetrized()
            .iter()
            .map(|mono| f.coeff(mono).value())
            .collect())
    }

    pub fn contains(&self, f: &Element) -> Result<bool, Error> {
        let v = self.coords_of(f)?;
        self.basis.contains(&v)
    }
}

/// Marked/unmarked split of the symmetrized monomials of one degree.
/// Marked means: realizable as the leading term of a supersymmetric
/// element, i.e. a pivot of the echelonized basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedReport {
    pub degree: u64,
    pub marked: Vec<Monomial>,
    pub unmarked: Vec<Monomial>,
}

pub fn marked_monomials(ctx: Context, k: u64) -> MarkedReport {
    let basis = basis_sk(ctx, k);
    let marked = basis.pivots();
    let unmarked: Vec<Monomial> = basis
        .columns()
        .iter()
        .filter(|m| !marked.contains(m))
        .cloned()
        .collect();
    MarkedReport { degree: k, marked, unmarked }
}

/// Predicted dimension of the degree-k supersymmetric elements of
/// Div[x1, y1]: free mixed terms, one pair family per (j, r), and the
/// alternating pure chain when p | k.
pub fn expected_dim_11(k: u64, p: u64) -> usize {
    let s = k % p;
    let l = k / p;
    let free = (0..=k).filter(|t| t % p > s).count();
    free + (s as usize) * (l as usize + 1) + usize::from(s == 0)
}

/// The explicit degree-k basis of supersymmetric elements of Div[x1, y1].
pub fn kbasis_11(k: u64, p: u64) -> Vec<Element> {
    let ctx = Context::new(p, 1, 1).expect("valid (1,1) context");
    let s = k % p;
    let l = k / p;
    let mono = |i: u64, j: u64| Monomial::new(vec![i], vec![j]);
    let mut out = Vec::new();
    for t in 0..=k {
        if t % p > s {
            out.push(Element::from_monomial(ctx, mono(t, k - t), 1));
        }
    }
    for r in 0..=l {
        for j in 0..s {
            // (s-j)! x^(k-pr-j) y^(pr+j) - s(s-1)...(j+1) x^(k-pr-s) y^(pr+s)
            let mut lead = 1i128;
            for v in 1..=(s - j) {
                lead *= v as i128;
            }
            let mut tail = 1i128;
            for v in (j + 1)..=s {
                tail *= v as i128;
            }
            out.push(Element::from_terms(
                ctx,
                [
                    (mono(k - p * r - j, p * r + j), lead),
                    (mono(k - p * r - s, p * r + s), -tail),
                ],
            ));
        }
    }
    if s == 0 {
        let chain = Element::from_terms(
            ctx,
            (0..=l).map(|r| (mono(p * r, k - p * r), if r % 2 == 0 { 1 } else { -1 })),
        );
        out.push(chain);
    }
    out
}

/// Checks, on every basis element of the degree-k supersymmetric space of
/// Div[x1, x2, y1], the coefficient chains
/// a_{i1,i2,j1} = a_{i1-p,i2+p,j1} = ... = a_{s1, i1+i2-s1, j1}
/// for every qualifying triple (p | j1, p | i2, i1 >= p).
pub fn check_lemma_blow(ctx: Context, k: u64) -> bool {
    assert!(ctx.m() == 2 && ctx.n() == 1, "chain check lives in Div[x1,x2,y1]");
    let p = ctx.p();
    let basis = basis_sk(ctx, k);
    for f in basis.elements() {
        for i1 in p..=k {
            for i2 in (0..=(k - i1)).step_by(p as usize) {
                let j1 = k - i1 - i2;
                if j1 % p != 0 {
                    continue;
                }
                let first = f.coeff(&Monomial::new(vec![i1, i2], vec![j1]));
                let mut t = 1u64;
                while i1 >= p * t {
                    let c = f.coeff(&Monomial::new(vec![i1 - p * t, i2 + p * t], vec![j1]));
                    if c != first {
                        return false;
                    }
                    t += 1;
                }
            }
        }
    }
    true
}

/// Echelonized basis of the space cut out by the witness formulation
/// directly: symmetric degree-k elements f such that
/// (d/dx1 + d/dy1) f = (x1 - y1) f' has a solution. Used to cross-check
/// `defining_system` (the two must agree in dimension and span).
pub fn oracle_space(ctx: Context, k: u64) -> SkBasis {
    assert!(ctx.m() >= 1 && ctx.n() >= 1, "needs both variable blocks");
    let p = ctx.p();
    let block = DegreeBlock::new(ctx, k);
    let acols = index_map(block.symmetrized());
    let na = block.symmetrized().len();
    let bcols: Vec<Monomial> = if k >= 2 {
        DegreeBlock::new(ctx, k - 2).monomials().to_vec()
    } else {
        Vec::new()
    };
    let bindex = index_map(&bcols);
    let ncols = na + bcols.len();
    let mut mat = FpMatrix::new(p, ncols);
    if k >= 1 {
        for nmono in DegreeBlock::new(ctx, k - 1).monomials() {
            let mut entries: Vec<(usize, u64)> = Vec::new();
            // coefficient of D(f) at nmono, f = sum A_W orbit(W)
            let mut xup = nmono.xexp().to_vec();
            xup[0] += 1;
            let up_x = Monomial::new(xup, nmono.yexp().to_vec()).symmetrize();
            entries.push((acols[&up_x], 1));
            let mut yup = nmono.yexp().to_vec();
            yup[0] += 1;
            let up_y = Monomial::new(nmono.xexp().to_vec(), yup).symmetrize();
            entries.push((acols[&up_y], 1));
            // minus the coefficient of (x1 - y1) f' at nmono
            if nmono.xexp()[0] >= 1 {
                let mut x = nmono.xexp().to_vec();
                x[0] -= 1;
                let u = Monomial::new(x, nmono.yexp().to_vec());
                let c = FpScalar::new(-((nmono.xexp()[0] % p) as i128), p);
                if !c.is_zero() {
                    entries.push((na + bindex[&u], c.value()));
                }
            }
            if nmono.yexp()[0] >= 1 {
                let mut y = nmono.yexp().to_vec();
                y[0] -= 1;
                let u = Monomial::new(nmono.xexp().to_vec(), y);
                let c = FpScalar::from_u64(nmono.yexp()[0] % p, p);
                if !c.is_zero() {
                    entries.push((na + bindex[&u], c.value()));
                }
            }
            mat.push_row_sparse(&entries);
        }
    }
    let projected: Vec<Vec<u64>> = mat
        .nullspace()
        .into_iter()
        .map(|v| v[..na].to_vec())
        .collect();
    let basis = EchelonBasis::from_vectors(p, na, &projected).expect("projection keeps length");
    SkBasis { block, basis }
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
        Element::from_terms(c, terms.iter().map(|&(x, y, v)| (mono(x, y), v)))
    }

    #[test]
    fn symmetry_check() {
        let c21 = ctx(3, 2, 1);
        let f21 = orbit_sum(c21, &[2, 1], &[0]).unwrap();
        assert!(is_symmetric(&f21));
        let single = elem(c21, &[(&[2, 1], &[0], 1)]);
        assert!(!is_symmetric(&single));
        let c11 = ctx(3, 1, 1);
        assert!(is_symmetric(&elem(c11, &[(&[2], &[1], 1)])));
    }

    #[test]
    fn oracle_examples() {
        let c = ctx(3, 1, 1);
        // x y^(2) is supersymmetric with witness y
        let f = elem(c, &[(&[1], &[2], 1)]);
        let w = oracle_supersymmetric(&f).expect("supersymmetric");
        let lhs = f.derive(Var::X(0)).add(&f.derive(Var::Y(0)));
        assert_eq!(w.mul_x1_minus_y1(), lhs);
        assert_eq!(w, elem(c, &[(&[0], &[1], 1)]));

        let g = elem(c, &[(&[3], &[0], 1)]);
        assert!(oracle_supersymmetric(&g).is_none());

        let h = elem(c, &[(&[0], &[3], 1), (&[3], &[0], -1)]);
        assert!(oracle_supersymmetric(&h).is_some());
    }

    #[test]
    fn oracle_on_inhomogeneous_input() {
        let c = ctx(3, 1, 1);
        // (x - y) + x y^(2): both components supersymmetric
        let f = elem(c, &[(&[1], &[0], 1), (&[0], &[1], -1), (&[1], &[2], 1)]);
        let w = oracle_supersymmetric(&f).expect("both components pass");
        let lhs = f.derive(Var::X(0)).add(&f.derive(Var::Y(0)));
        assert_eq!(w.mul_x1_minus_y1(), lhs);
        // adding a failing component breaks it
        let g = f.add(&elem(c, &[(&[3], &[0], 1)]));
        assert!(oracle_supersymmetric(&g).is_none());
    }

    #[test]
    fn defining_system_examples() {
        let c = ctx(3, 1, 1);
        let b3 = DegreeBlock::new(c, 3);
        let m3 = defining_system(&b3);
        // single chain constraint a_{3,0} + a_{0,3} = 0
        assert_eq!(m3.nrows(), 1);
        assert_eq!(m3.row_dense(0), vec![1, 0, 0, 1]);

        let b1 = DegreeBlock::new(c, 1);
        let m1 = defining_system(&b1);
        assert_eq!(m1.nrows(), 1);
        assert_eq!(m1.row_dense(0), vec![1, 1]);

        let b0 = DegreeBlock::new(c, 0);
        assert_eq!(defining_system(&b0).nrows(), 0);
    }

    #[test]
    fn basis_examples() {
        let c = ctx(3, 1, 1);
        let b = basis_sk(c, 3);
        assert_eq!(b.dim(), 3);
        let pivots = b.pivots();
        assert_eq!(
            pivots,
            vec![mono(&[3], &[0]), mono(&[2], &[1]), mono(&[1], &[2])]
        );
        for f in b.elements() {
            assert!(oracle_supersymmetric(&f).is_some());
        }

        let b1 = basis_sk(c, 1);
        assert_eq!(b1.dim(), 1);
        assert_eq!(b1.elements()[0], elem(c, &[(&[1], &[0], 1), (&[0], &[1], -1)]));

        let b0 = basis_sk(c, 0);
        assert_eq!(b0.dim(), 1);
        assert_eq!(b0.elements()[0], Element::one(c));
    }

    #[test]
    fn marked_examples() {
        let c = ctx(3, 1, 1);
        let report = marked_monomials(c, 3);
        assert_eq!(
            report.marked,
            vec![mono(&[3], &[0]), mono(&[2], &[1]), mono(&[1], &[2])]
        );
        assert_eq!(report.unmarked, vec![mono(&[0], &[3])]);

        let c21 = ctx(3, 2, 1);
        let report = marked_monomials(c21, 2);
        assert!(report.marked.contains(&mono(&[1, 1], &[0])));
        assert!(report.marked.contains(&mono(&[2, 0], &[0])));
        assert!(report.unmarked.contains(&mono(&[1, 0], &[1])));

        let report0 = marked_monomials(c, 0);
        assert_eq!(report0.marked, vec![mono(&[0], &[0])]);
        assert!(report0.unmarked.is_empty());
    }

    #[test]
    fn expected_dim_11_examples() {
        assert_eq!(expected_dim_11(3, 3), 3);
        assert_eq!(expected_dim_11(4, 3), 3);
        assert_eq!(expected_dim_11(0, 3), 1);
    }

    #[test]
    fn kbasis_11_examples() {
        let c = ctx(3, 1, 1);
        let k4 = kbasis_11(4, 3);
        assert_eq!(k4.len(), 3);
        assert!(k4.contains(&elem(c, &[(&[2], &[2], 1)])));
        assert!(k4.contains(&elem(c, &[(&[4], &[0], 1), (&[3], &[1], -1)])));
        assert!(k4.contains(&elem(c, &[(&[1], &[3], 1), (&[0], &[4], -1)])));

        let k3 = kbasis_11(3, 3);
        assert_eq!(k3.len(), 3);
        assert!(k3.contains(&elem(c, &[(&[2], &[1], 1)])));
        assert!(k3.contains(&elem(c, &[(&[1], &[2], 1)])));
        assert!(k3.contains(&elem(c, &[(&[0], &[0], 1)])) == false);
        assert!(k3.contains(&elem(c, &[(&[0], &[3], 1), (&[3], &[0], -1)])));

        assert_eq!(kbasis_11(0, 3), vec![Element::one(c)]);
    }

    #[test]
    fn lemma_blow_examples() {
        let c = ctx(3, 2, 1);
        assert!(check_lemma_blow(c, 6));
        assert!(check_lemma_blow(c, 9));
        // no qualifying triple at degree 1
        assert!(check_lemma_blow(c, 1));
    }

    #[test]
    fn full_system_dimension_agrees() {
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
            let c = ctx(3, m, n);
            for k in 0..=6u64 {
                let block = DegreeBlock::new(c, k);
                let sym_dim = basis_sk(c, k).dim();
                let full = defining_system_full(&block);
                let full_dim = block.monomials().len() - full.rank();
                assert_eq!(sym_dim, full_dim, "m={m} n={n} k={k}");
            }
        }
    }

    #[test]
    fn n_zero_falls_back_to_symmetric_basis() {
        let c = ctx(3, 2, 0);
        let b = basis_sk(c, 3);
        // partitions of 3 into <= 2 parts
        assert_eq!(b.dim(), 2);
        assert_eq!(b.pivots(), vec![mono(&[3, 0], &[]), mono(&[2, 1], &[])]);
        for f in b.elements() {
            assert!(is_symmetric(&f));
        }
    }

    #[test]
    fn membership_in_sk() {
        let c = ctx(3, 1, 1);
        let b = basis_sk(c, 4);
        for f in kbasis_11(4, 3) {
            assert!(b.contains(&f).unwrap());
        }
        let not_super = elem(c, &[(&[4], &[0], 1)]);
        assert!(!b.contains(&not_super).unwrap());
    }
}
