//! Verification suites: machine checks of the documented structure
//! results at desk scale. Everything is exact over F_p; a suite passes
//! only on exact agreement.

use crate::catalog::{
    height, theorem_generators, FamilySpec, GeneratorCase, HeightClass, PowerVariant,
};
use crate::divalg::{ell_y, ell_y_multinomial, Context, Element, Monomial};
use crate::error::Error;
use crate::fplin::EchelonBasis;
use crate::spanalg::{span_check, SpanTarget};
use crate::supersym::{
    basis_sk, check_lemma_blow, expected_dim_11, kbasis_11, marked_monomials, oracle_space,
    oracle_supersymmetric,
};

/// Outcome of one suite: pass/fail plus a few lines of evidence.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CriterionOutcome {
    fn new(id: &'static str, title: &'static str) -> Self {
        CriterionOutcome { id, title, passed: true, details: Vec::new() }
    }

    fn fail(&mut self, msg: String) {
        self.passed = false;
        if self.details.len() < 24 {
            self.details.push(msg);
        }
    }

    fn note(&mut self, msg: String) {
        if self.details.len() < 24 {
            self.details.push(msg);
        }
    }
}

pub const SUITE_IDS: &[&str] = &[
    "kbasis11",
    "oracle-equivalence",
    "gen11",
    "sym-generators",
    "m1-theorem",
    "one-two-theorem",
    "two-two-theorem",
    "counterexample-4-4",
    "lemma-blow-chains",
    "unmarked-lemmas",
    "e-leading-terms",
];

pub fn run_suite(id: &str) -> Option<Result<CriterionOutcome, Error>> {
    match id {
        "kbasis11" => Some(kbasis_fidelity()),
        "oracle-equivalence" => Some(oracle_equivalence()),
        "gen11" => Some(gen11_span()),
        "sym-generators" => Some(sym_generators_span()),
        "m1-theorem" => Some(m1_theorem()),
        "one-two-theorem" => Some(one_two_theorem()),
        "two-two-theorem" => Some(two_two_theorem()),
        "counterexample-4-4" => Some(counterexample_4_4()),
        "lemma-blow-chains" => Some(lemma_blow_chains()),
        "unmarked-lemmas" => Some(unmarked_lemmas()),
        "e-leading-terms" => Some(e_leading_terms()),
        _ => None,
    }
}

pub fn run_all() -> Result<Vec<CriterionOutcome>, Error> {
    SUITE_IDS
        .iter()
        .map(|id| run_suite(id).expect("listed suite exists"))
        .collect()
}

/// Explicit degree-k basis of Div[x1,y1]: every element passes the
/// oracle, the list is independent, and its size equals the nullity of
/// the defining system, for p in {3,5} and k <= 40.
fn kbasis_fidelity() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "kbasis11",
        "explicit two-variable basis: oracle, independence, dimension (p=3,5; k<=40)",
    );
    for p in [3u64, 5] {
        let ctx = Context::new(p, 1, 1)?;
        for k in 0..=40u64 {
            let list = kbasis_11(k, p);
            let target = basis_sk(ctx, k);
            for (i, f) in list.iter().enumerate() {
                if oracle_supersymmetric(f).is_none() {
                    out.fail(format!("p={p} k={k}: element #{i} fails the oracle"));
                }
            }
            let coords: Result<Vec<Vec<u64>>, Error> =
                list.iter().map(|f| target.coords_of(f)).collect();
            let ech = EchelonBasis::from_vectors(p, target.columns().len(), &coords?)?;
            if ech.dim() != list.len() {
                out.fail(format!(
                    "p={p} k={k}: {} elements span only {} dimensions",
                    list.len(),
                    ech.dim()
                ));
            }
            if list.len() != target.dim() {
                out.fail(format!(
                    "p={p} k={k}: list size {} vs nullity {}",
                    list.len(),
                    target.dim()
                ));
            }
            if list.len() != expected_dim_11(k, p) {
                out.fail(format!(
                    "p={p} k={k}: list size {} vs predicted count {}",
                    list.len(),
                    expected_dim_11(k, p)
                ));
            }
        }
    }
    Ok(out)
}

/// The witness formulation and the equation formulation cut out the same
/// spaces: equal dimensions and mutual span containment, p=3, four
/// contexts, k <= 12.
fn oracle_equivalence() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "oracle-equivalence",
        "witness oracle vs defining equations: same spaces (p=3; (m,n) up to (2,2); k<=12)",
    );
    for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
        let ctx = Context::new(3, m, n)?;
        for k in 0..=12u64 {
            let eqs = basis_sk(ctx, k);
            let orc = oracle_space(ctx, k);
            if eqs.dim() != orc.dim() {
                out.fail(format!(
                    "({m},{n}) k={k}: equation dim {} vs oracle dim {}",
                    eqs.dim(),
                    orc.dim()
                ));
                continue;
            }
            for row in eqs.echelon().rows() {
                if !orc.echelon().contains(row)? {
                    out.fail(format!("({m},{n}) k={k}: equation vector outside oracle span"));
                }
            }
            for row in orc.echelon().rows() {
                if !eqs.echelon().contains(row)? {
                    out.fail(format!("({m},{n}) k={k}: oracle vector outside equation span"));
                }
            }
        }
    }
    Ok(out)
}

/// The two-variable generator list spans every degree up to 18 at p = 3.
fn gen11_span() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "gen11",
        "two-variable generators x y^(k-1) - k y^(k) and p-power chains span (p=3; k<=18)",
    );
    let ctx = Context::new(3, 1, 1)?;
    let mut gens = Vec::new();
    for k in 1..=18u64 {
        gens.push(crate::catalog::family_element(&FamilySpec::PairC { k }, ctx)?);
    }
    let mut s = 1u32;
    while 3u64.pow(s) <= 18 {
        gens.push(crate::catalog::family_element(&FamilySpec::PairSigma { s }, ctx)?);
        s += 1;
    }
    let report = span_check(ctx, &gens, SpanTarget::Supersym, 18)?;
    for d in &report.degrees {
        if !d.missing.is_empty() {
            out.fail(format!(
                "degree {}: achieved {} of {}, missing {}",
                d.degree,
                d.achieved_dim,
                d.target_dim,
                join_monos(&d.missing)
            ));
        }
    }
    Ok(out)
}

/// The even orbit-sum generators f_{q, a2..} with q a p-power span the
/// symmetric elements, p in {3,5}, m in {2,3}, degrees <= 12.
fn sym_generators_span() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "sym-generators",
        "even generators f_{q,a..} with q a p-power span Div[x]^Sigma (p=3,5; m=2,3; k<=12)",
    );
    for p in [3u64, 5] {
        for m in [2usize, 3] {
            let ctx = Context::new(p, m, 0)?;
            let gens: Vec<Element> =
                theorem_generators(GeneratorCase::Sym { m }, p, 12, PowerVariant::default())?
                    .into_iter()
                    .map(|(_, e)| e)
                    .collect();
            let report = span_check(ctx, &gens, SpanTarget::SymX, 12)?;
            for d in &report.degrees {
                let partitions = crate::divalg::partitions(d.degree, m).len();
                if d.target_dim != partitions {
                    out.fail(format!(
                        "p={p} m={m} degree {}: target {} but {} partitions",
                        d.degree, d.target_dim, partitions
                    ));
                }
                if d.achieved_dim != d.target_dim || !d.missing.is_empty() {
                    out.fail(format!(
                        "p={p} m={m} degree {}: achieved {} of {}",
                        d.degree, d.achieved_dim, d.target_dim
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// One odd variable: the listed generators span with pure powers taken
/// from s >= 1; the stated s > 1 range leaves pure-power holes, which are
/// recorded and attributed, not failed.
fn m1_theorem() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "m1-theorem",
        "Div[x1,x2,y1] generator list spans (p=3; k<=9; pure powers from s>=1)",
    );
    let ctx = Context::new(3, 2, 1)?;
    let gens: Vec<Element> =
        theorem_generators(GeneratorCase::M1 { m: 2 }, 3, 9, PowerVariant::SGe1)?
            .into_iter()
            .map(|(_, e)| e)
            .collect();
    let report = span_check(ctx, &gens, SpanTarget::Supersym, 9)?;
    for d in &report.degrees {
        for mono in &d.missing {
            out.fail(format!(
                "s>=1 variant: degree {} does not reach the marked monomial {}",
                d.degree, mono
            ));
            // independent confirmation that the hole is real: the orbit
            // correction with these exponents verifies and leads there
            let xexp = mono.xexp().to_vec();
            let spec = FamilySpec::Jeden { xexp, j1: mono.yexp()[0] };
            if crate::catalog::family_element(&spec, ctx).is_ok() {
                out.note(format!(
                    "  {mono} is the leading term of the oracle-verified element {spec}; \
                     its x residues are prime to p but their sum is not divisible by p, \
                     so the listed tau family excludes it and no product reaches it"
                ));
            }
        }
    }
    // the stated s > 1 range: record its additional gaps; each one must
    // disappear once x1^(p) joins the list (the documented open point)
    let strict: Vec<Element> =
        theorem_generators(GeneratorCase::M1 { m: 2 }, 3, 9, PowerVariant::SGt1)?
            .into_iter()
            .map(|(_, e)| e)
            .collect();
    let strict_report = span_check(ctx, &strict, SpanTarget::Supersym, 9)?;
    for (d_strict, d_wide) in strict_report.degrees.iter().zip(&report.degrees) {
        for mono in &d_strict.missing {
            if d_wide.missing.contains(mono) {
                continue; // already reported against the wider variant
            }
            out.note(format!(
                "s>1 variant additionally misses {} at degree {} (attributed: needs the \
                 degree-p pure power the stated range omits)",
                mono, d_strict.degree
            ));
        }
        for mono in &d_wide.missing {
            if !d_strict.missing.contains(mono) {
                out.fail(format!(
                    "s>1 variant reaches {mono} but s>=1 does not; span should be monotone"
                ));
            }
        }
    }
    Ok(out)
}

/// Predicted marked set for Div[x1, y1, y2]: height-one y parts need
/// x-residue >= 1, higher ones need >= 2, and the pure powers carry
/// p | i. The all-zero y tuple counts as height one.
fn predicted_marked_12(mono: &Monomial, p: u64) -> bool {
    let i = mono.xexp()[0];
    let js = mono.yexp();
    let r1 = i % p;
    let pure = js.iter().all(|&j| j == 0);
    let h = height(js, p).expect("symmetrized monomial");
    (h == HeightClass::One && r1 >= 1)
        || (h == HeightClass::Greater && r1 >= 2)
        || (pure && r1 == 0)
}

/// One even, two odd variables: the generator list spans to degree 10
/// and the computed marked sets match the predicted classification
/// exactly at every degree.
fn one_two_theorem() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "one-two-theorem",
        "Div[x1,y1,y2]: generators span and marked sets match the height rule (p=3; k<=10)",
    );
    let ctx = Context::new(3, 1, 2)?;
    let gens: Vec<Element> = theorem_generators(GeneratorCase::OneTwo, 3, 10, PowerVariant::SGe1)?
        .into_iter()
        .map(|(_, e)| e)
        .collect();
    let report = span_check(ctx, &gens, SpanTarget::Supersym, 10)?;
    for d in &report.degrees {
        if !d.missing.is_empty() {
            out.fail(format!(
                "degree {} missing {}",
                d.degree,
                join_monos(&d.missing)
            ));
        }
    }
    for k in 0..=10u64 {
        let report = marked_monomials(ctx, k);
        for mono in &report.marked {
            if !predicted_marked_12(mono, 3) {
                out.fail(format!("k={k}: {mono} is marked but not predicted"));
            }
        }
        for mono in &report.unmarked {
            if predicted_marked_12(mono, 3) {
                out.fail(format!("k={k}: {mono} is predicted marked but is not"));
            }
        }
    }
    Ok(out)
}

/// The unmarked classes of the four-variable classification.
fn styri_unmarked(mono: &Monomial, p: u64) -> bool {
    let (i1, i2) = (mono.xexp()[0], mono.xexp()[1]);
    let (j1, j2) = (mono.yexp()[0], mono.yexp()[1]);
    let h = height(mono.yexp(), p).expect("symmetrized monomial");
    let bullet1 = (i1 % p == 0 || i2 % p == 0) && (i2 > 0 || j1 > 0);
    let bullet2 = (i1 % p == 1 || i2 % p == 1) && h == HeightClass::Greater;
    let bullet3 = i1 % p > 0
        && i2 % p == 1
        && i2 / p > 0
        && j1 % p != p - 1
        && h == HeightClass::One;
    let _ = j2;
    bullet1 || bullet2 || bullet3
}

/// Two even, two odd variables: the generator list spans to degree 8 and
/// the classified unmarked families avoid the computed marked sets.
fn two_two_theorem() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "two-two-theorem",
        "Div[x1,x2,y1,y2]: generators span; classified unmarked classes stay unmarked (p=3; k<=8)",
    );
    let ctx = Context::new(3, 2, 2)?;
    let gens: Vec<Element> = theorem_generators(GeneratorCase::TwoTwo, 3, 8, PowerVariant::SGe1)?
        .into_iter()
        .map(|(_, e)| e)
        .collect();
    let report = span_check(ctx, &gens, SpanTarget::Supersym, 8)?;
    for d in &report.degrees {
        for mono in &d.missing {
            out.fail(format!(
                "degree {} does not reach the marked monomial {}",
                d.degree, mono
            ));
            let (r1, r2) = (mono.xexp()[0] % 3, mono.xexp()[1] % 3);
            out.note(format!(
                "  {mono} has x residues ({r1},{r2}); the listed families cover only \
                 (1,1) and (2,2), and neither products nor the height families reach it"
            ));
        }
    }
    for k in 0..=8u64 {
        let report = marked_monomials(ctx, k);
        for mono in &report.marked {
            if styri_unmarked(mono, 3) {
                out.fail(format!("k={k}: {mono} is marked but classified unmarked"));
            }
        }
    }
    Ok(out)
}

/// Degree-8 basis of Div[x1,x2,y1] contains an element whose coefficients
/// at x^(7,1) and x^(4,4) differ: equal x-residues do not force equal
/// coefficients.
fn counterexample_4_4() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "counterexample-4-4",
        "a supersymmetric element of Div[x1,x2,y1] has different coefficients at x^(7,1) and x^(4,4)",
    );
    let ctx = Context::new(3, 2, 1)?;
    let basis = basis_sk(ctx, 8);
    let a = Monomial::new(vec![7, 1], vec![0]);
    let b = Monomial::new(vec![4, 4], vec![0]);
    let witness = basis
        .elements()
        .into_iter()
        .find(|f| f.coeff(&a) != f.coeff(&b));
    match witness {
        Some(f) => out.note(format!(
            "witness: coefficient {} at {a}, {} at {b}",
            f.coeff(&a),
            f.coeff(&b)
        )),
        None => out.fail("every basis element agrees at the two monomials".to_string()),
    }
    Ok(out)
}

/// The p-step coefficient chains hold on every basis element of
/// Div[x1,x2,y1] for every qualifying monomial, k <= 15.
fn lemma_blow_chains() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "lemma-blow-chains",
        "coefficient chains a_{i1,i2,j1} = a_{i1-p,i2+p,j1} = ... hold (p=3; k<=15)",
    );
    let ctx = Context::new(3, 2, 1)?;
    for k in 0..=15u64 {
        if !check_lemma_blow(ctx, k) {
            out.fail(format!("chain broken at degree {k}"));
        }
    }
    Ok(out)
}

/// The two structural unmarkedness statements: a p-divisible x exponent
/// with y content, and the positional refinements, always land in the
/// computed unmarked sets.
fn unmarked_lemmas() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "unmarked-lemmas",
        "structurally unmarked monomials are computed unmarked (p=3; (2,1),(2,2); k<=9)",
    );
    for (m, n) in [(2usize, 1usize), (2, 2)] {
        let ctx = Context::new(3, m, n)?;
        for k in 0..=9u64 {
            let report = marked_monomials(ctx, k);
            for mono in report.marked.iter() {
                let lemma35 = mono.yexp()[0] > 0 && mono.xexp().iter().any(|&i| i % 3 == 0);
                let cor44 = mono.xexp()[1..].iter().any(|&i| i > 0 && i % 3 == 0)
                    || (mono.xexp()[0] % 3 == 0 && mono.xexp()[1] > 0);
                if lemma35 {
                    out.fail(format!(
                        "({m},{n}) k={k}: {mono} marked despite p-divisible x exponent with y content"
                    ));
                }
                if cor44 {
                    out.fail(format!(
                        "({m},{n}) k={k}: {mono} marked despite the positional p-divisibility rule"
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// E_t passes the oracle and its leading term is x1..xm times the
/// lex-max minimal-valuation y monomial; the alternative multinomial
/// reading is reported when it disagrees.
fn e_leading_terms() -> Result<CriterionOutcome, Error> {
    let mut out = CriterionOutcome::new(
        "e-leading-terms",
        "E_t: oracle passes and leading terms match the valuation rule (p=3; (1,1),(2,2); t<=10)",
    );
    let mut discrepancy_reported = false;
    for (m, n) in [(1usize, 1usize), (2, 2)] {
        let ctx = Context::new(3, m, n)?;
        for t in 1..=10u64 {
            let e = crate::divalg::e_element(ctx, t)?;
            if oracle_supersymmetric(&e).is_none() {
                out.fail(format!("({m},{n}) t={t}: E_t fails the oracle"));
                continue;
            }
            let (lead, _) = e.leading_term()?;
            let expect = if t <= m as u64 {
                let x: Vec<u64> = (0..m).map(|i| u64::from((i as u64) < t)).collect();
                Monomial::new(x, vec![0; n])
            } else {
                let k = t - m as u64;
                let ell = ell_y(k, n, 3);
                if ell_y_multinomial(k, n, 3).as_deref() != Some(&ell[..]) && !discrepancy_reported
                {
                    discrepancy_reported = true;
                    out.note(format!(
                        "normalization discrepancy at k={k}, n={n}: factorial rule gives {:?}, multinomial rule gives {:?}; the factorial rule matches the computed leading terms",
                        ell,
                        ell_y_multinomial(k, n, 3)
                    ));
                }
                Monomial::new(vec![1; m], ell)
            };
            if lead != expect {
                out.fail(format!("({m},{n}) t={t}: leading term {lead}, expected {expect}"));
            }
        }
    }
    Ok(out)
}

fn join_monos(monos: &[Monomial]) -> String {
    monos.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}
