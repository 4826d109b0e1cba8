// temporary probe: confirm the markedness of the monomials the printed
// generator lists cannot reach
use divsym::catalog::{family_element, FamilySpec};
use divsym::divalg::{Context, Monomial};
use divsym::supersym::{basis_sk, oracle_supersymmetric};

fn main() {
    let c21 = Context::new(3, 2, 1).unwrap();
    for j1 in [0u64, 1] {
        let spec = FamilySpec::Jeden { xexp: vec![4, 4], j1 };
        match family_element(&spec, c21) {
            Ok(e) => println!("{spec}: oracle ok, leading {}", e.leading_term().unwrap().0),
            Err(e) => println!("{spec}: {e}"),
        }
    }
    let c22 = Context::new(3, 2, 2).unwrap();
    let b8 = basis_sk(c22, 8);
    let target = Monomial::new(vec![4, 2], vec![2, 0]);
    let pivots = b8.pivots();
    let idx = pivots.iter().position(|m| *m == target);
    println!("x^(4,2)y^(2,0) marked in (2,2) at k=8: {:?}", idx.is_some());
    if let Some(i) = idx {
        let f = &b8.elements()[i];
        println!("  basis element has {} terms, oracle: {}", f.num_terms(),
                 oracle_supersymmetric(f).is_some());
    }
    // how many terms does the sparsest oracle-true element led by x^(4,4) have
    let b8_21 = basis_sk(c21, 8);
    let t44 = Monomial::new(vec![4, 4], vec![0]);
    let i44 = b8_21.pivots().iter().position(|m| *m == t44);
    println!("x^(4,4) marked in (2,1) at k=8: {:?}", i44.is_some());
}
