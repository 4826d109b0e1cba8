//! Graded spanning checker: decides degree by degree whether a generator
//! list generates the target graded algebra, by leading-term echelon
//! comparison against the target basis.

use crate::divalg::{orbit_sum, partitions, Context, Element, Monomial};
use crate::error::Error;
use crate::fplin::EchelonBasis;
use crate::supersym::basis_sk;

/// What the generated algebra is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanTarget {
    /// The supersymmetric elements of the context.
    Supersym,
    /// The symmetric elements of a purely even context (n = 0).
    SymX,
}

/// Per-degree outcome: dimensions and the target pivots the generated
/// algebra misses.
#[derive(Debug, Clone)]
pub struct DegreeReport {
    pub degree: u64,
    pub target_dim: usize,
    pub achieved_dim: usize,
    pub missing: Vec<Monomial>,
}

#[derive(Debug, Clone)]
pub struct SpanReport {
    pub degrees: Vec<DegreeReport>,
}

impl SpanReport {
    pub fn has_gaps(&self) -> bool {
        self.degrees.iter().any(|d| !d.missing.is_empty())
    }

    pub fn gap_degrees(&self) -> Vec<u64> {
        self.degrees
            .iter()
            .filter(|d| !d.missing.is_empty())
            .map(|d| d.degree)
            .collect()
    }
}

/// Orbit-sum basis of the degree-k symmetric elements of Div[x1..xm]:
/// one f per partition of k into at most m parts.
pub fn sym_basis(m: usize, k: u64, p: u64) -> Result<Vec<Element>, Error> {
    let ctx = Context::new(p, m, 0)?;
    partitions(k, m)
        .iter()
        .map(|part| orbit_sum(ctx, part, &[]))
        .collect()
}

/// Degree-by-degree span comparison. For each k <= bound the component
/// A_k of the algebra generated by the (homogeneous) generators is built
/// bottom-up as sum over generators g of g * A_{k - deg g}, echelonized
/// on orbit coordinates, and compared with the target space by dimension
/// and pivot containment.
pub fn span_check(
    ctx: Context,
    generators: &[Element],
    target: SpanTarget,
    bound: u64,
) -> Result<SpanReport, Error> {
    if target == SpanTarget::SymX {
        assert_eq!(ctx.n(), 0, "SymX target lives in a purely even context");
    }
    let mut degrees_of: Vec<(u64, &Element)> = Vec::new();
    for g in generators {
        if g.is_zero() {
            return Err(Error::NotHomogeneous);
        }
        let Some(d) = g.homogeneous_degree() else {
            return Err(Error::NotHomogeneous);
        };
        if d >= 1 {
            degrees_of.push((d, g));
        }
    }

    // achieved[k]: echelon of A_k plus an independent spanning set of
    // elements used to build higher degrees
    let mut achieved: Vec<(EchelonBasis, Vec<Element>)> = Vec::new();
    let mut reports = Vec::new();
    for k in 0..=bound {
        let target_basis = basis_sk(ctx, k);
        let ncols = target_basis.columns().len();
        let mut ech = EchelonBasis::empty(ctx.p(), ncols);
        let mut reps: Vec<Element> = Vec::new();
        if k == 0 {
            let one = Element::one(ctx);
            ech.insert(&target_basis.coords_of(&one)?)?;
            reps.push(one);
        } else {
            for &(d, g) in &degrees_of {
                if d > k {
                    continue;
                }
                for b in &achieved[(k - d) as usize].1 {
                    let prod = g.mul(b);
                    if prod.is_zero() {
                        continue;
                    }
                    let coords = target_basis.coords_of(&prod)?;
                    if ech.insert(&coords)? {
                        reps.push(prod);
                    }
                }
            }
        }
        let target_pivots = target_basis.pivots();
        let achieved_pivots: Vec<Monomial> = ech
            .pivot_columns()
            .iter()
            .map(|&c| target_basis.columns()[c].clone())
            .collect();
        let missing: Vec<Monomial> = target_pivots
            .iter()
            .filter(|m| !achieved_pivots.contains(m))
            .cloned()
            .collect();
        reports.push(DegreeReport {
            degree: k,
            target_dim: target_basis.dim(),
            achieved_dim: ech.dim(),
            missing,
        });
        achieved.push((ech, reps));
    }
    Ok(SpanReport { degrees: reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{family_element, FamilySpec};
    use crate::supersym::oracle_supersymmetric;

    fn ctx(p: u64, m: usize, n: usize) -> Context {
        Context::new(p, m, n).unwrap()
    }

    #[test]
    fn sym_basis_counts() {
        assert_eq!(sym_basis(2, 3, 3).unwrap().len(), 2);
        assert_eq!(sym_basis(3, 3, 3).unwrap().len(), 3);
        assert_eq!(sym_basis(2, 0, 3).unwrap().len(), 1);
    }

    #[test]
    fn single_generator_gap() {
        let c = ctx(3, 1, 1);
        let x_minus_y = family_element(&FamilySpec::E { t: 1 }, c).unwrap();
        let report = span_check(c, &[x_minus_y], SpanTarget::Supersym, 3).unwrap();
        assert!(!report.degrees[1].missing.is_empty() || report.degrees[1].achieved_dim == 1);
        // degree 2: powers of (x - y) span one dimension, the target has two
        let d2 = &report.degrees[2];
        assert_eq!(d2.target_dim, 2);
        assert_eq!(d2.achieved_dim, 1);
        assert_eq!(d2.missing.len(), 1);
    }

    #[test]
    fn empty_generator_list() {
        let c = ctx(3, 1, 1);
        let report = span_check(c, &[], SpanTarget::Supersym, 2).unwrap();
        assert_eq!(report.degrees[0].achieved_dim, 1);
        assert_eq!(report.degrees[1].achieved_dim, 0);
        assert_eq!(report.degrees[2].achieved_dim, 0);
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        let c = ctx(3, 1, 1);
        let one = Element::one(c);
        let mixed = one.add(&family_element(&FamilySpec::E { t: 1 }, c).unwrap());
        assert!(span_check(c, &[mixed], SpanTarget::Supersym, 2).is_err());
    }

    #[test]
    fn monotone_in_generators() {
        let c = ctx(3, 1, 1);
        let g1 = family_element(&FamilySpec::PairC { k: 1 }, c).unwrap();
        let g2 = family_element(&FamilySpec::PairC { k: 2 }, c).unwrap();
        let small = span_check(c, &[g1.clone()], SpanTarget::Supersym, 6).unwrap();
        let big = span_check(c, &[g1, g2], SpanTarget::Supersym, 6).unwrap();
        for (a, b) in small.degrees.iter().zip(&big.degrees) {
            assert!(b.achieved_dim >= a.achieved_dim);
        }
    }

    #[test]
    fn products_of_supersymmetric_generators_stay_supersymmetric() {
        let c = ctx(3, 1, 1);
        let g1 = family_element(&FamilySpec::PairC { k: 2 }, c).unwrap();
        let g2 = family_element(&FamilySpec::PairSigma { s: 1 }, c).unwrap();
        for f in [g1.mul(&g2), g1.mul(&g1), g2.mul(&g2.mul(&g1))] {
            if !f.is_zero() {
                assert!(oracle_supersymmetric(&f).is_some());
            }
        }
    }
}
