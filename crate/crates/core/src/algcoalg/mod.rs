//! Finite-dimensional algebras, coalgebras, bimodules and bicomodules given by
//! structure constants, together with their axiom validators.

mod homop;
mod linear_map;
mod structures;

pub use homop::{hom_operator, sandwich};
pub use linear_map::{chain, compose, identity, tensor, tensor_all, LinearMap};
pub use structures::{
    compare_maps, default_labels, format_witness, tensor_labels, validate_algebra, validate_bicomodule, validate_bimodule,
    validate_coalgebra, Bicomodule, Bimodule, FiniteAlgebra, FiniteCoalgebra, Triple,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{FieldSpec, Matrix, Scalar};
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(Q, n)
    }

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn z2_algebra(gg: usize) -> FiniteAlgebra {
        let t = [(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1)), (1, 1, gg, q(1))];
        FiniteAlgebra::from_structure_constants(Q, labels(&["1", "g"]), &t, vec![q(1), q(0)]).unwrap()
    }

    fn z2_coalgebra(counit_g: i64) -> FiniteCoalgebra {
        let t = [(0, 0, 0, q(1)), (1, 1, 1, q(1))];
        FiniteCoalgebra::from_structure_constants(Q, labels(&["1", "g"]), &t, vec![q(1), q(counit_g)]).unwrap()
    }

    #[test]
    fn ground_field_structures_pass() {
        assert!(validate_algebra(&FiniteAlgebra::ground(Q)).passed());
        assert!(validate_coalgebra(&FiniteCoalgebra::ground(Q)).passed());
    }

    #[test]
    fn group_algebra_passes() {
        let a = z2_algebra(0);
        assert!(validate_algebra(&a).passed());
        assert!(validate_bimodule(&a, &a.regular_bimodule()).passed());
        let c = z2_coalgebra(1);
        assert!(validate_coalgebra(&c).passed());
        assert!(validate_bicomodule(&c, &c.regular_bicomodule()).passed());
    }

    #[test]
    fn idempotent_corruption_is_still_an_algebra() {
        // g·g = g gives k × k, which is associative and unital.
        assert!(validate_algebra(&z2_algebra(1)).passed());
    }

    #[test]
    fn corrupted_product_is_located() {
        let t = [(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 0, q(1)), (1, 1, 0, q(1))];
        let a = FiniteAlgebra::from_structure_constants(Q, labels(&["1", "g"]), &t, vec![q(1), q(0)]).unwrap();
        let r = validate_algebra(&a);
        let assoc = r.get("associativity").unwrap();
        assert!(!assoc.passed);
        assert_eq!(assoc.witness.as_deref(), Some("(g, 1, g)"));
        assert_eq!(r.get("right unit").unwrap().witness.as_deref(), Some("g"));
    }

    #[test]
    fn corrupted_counit_fails() {
        let r = validate_coalgebra(&z2_coalgebra(2));
        assert!(!r.passed());
        assert!(r.get("coassociativity").unwrap().passed);
        assert!(!r.get("left counit").unwrap().passed);
        assert_eq!(r.get("left counit").unwrap().witness.as_deref(), Some("g"));
    }

    #[test]
    fn non_associative_action_fails() {
        let a = z2_algebra(0);
        // g acts on the left by 2 instead of an involution.
        let left = Matrix::from_triplets(Q, 2, 4, [(0, 0, q(1)), (1, 1, q(1)), (0, 2, q(2)), (1, 3, q(2))]);
        let m = Bimodule::new(labels(&["m0", "m1"]), left, a.mult().matrix().clone()).unwrap();
        let r = validate_bimodule(&a, &m);
        assert!(!r.get("left associativity").unwrap().passed);
    }

    #[test]
    fn compose_with_identity() {
        let f = LinearMap::new(vec![3], vec![2], Matrix::from_i64_rows(Q, &[&[1, 2, 3], &[0, -1, 4]])).unwrap();
        assert_eq!(compose(&identity(Q, &[2]), &f).unwrap(), f);
        assert!(compose(&f, &f).is_err());
    }

    #[test]
    fn counit_cancels_comultiplication() {
        let a = z2_algebra(0);
        let c = z2_coalgebra(1);
        let ia = identity(Q, &[a.dim()]);
        let eps_c = tensor(c.counit_map(), &identity(Q, &[c.dim()])).unwrap();
        let lhs = tensor(&ia, &eps_c)
            .unwrap()
            .then_after(&tensor(&ia, c.comult()).unwrap())
            .reshape(&[2, 2], &[2, 2])
            .unwrap();
        assert_eq!(lhs, identity(Q, &[2, 2]));
    }

    #[test]
    fn tensor_concatenates_shapes() {
        let f = LinearMap::zero(Q, &[2], &[3]);
        let g = LinearMap::zero(Q, &[3], &[2]);
        let t = tensor(&f, &g).unwrap();
        assert_eq!(t.domain(), &[2, 3]);
        assert_eq!(t.codomain(), &[3, 2]);
        assert_eq!((t.dim_in(), t.dim_out()), (6, 6));
    }

    #[test]
    fn flip_swaps_factors() {
        let s = LinearMap::flip(Q, &[2], &[3]);
        let back = LinearMap::flip(Q, &[3], &[2]);
        assert_eq!(back.then_after(&s), identity(Q, &[2, 3]));
        // e_1 ⊗ e_2 -> e_2 ⊗ e_1
        assert_eq!(s.matrix().get(2 * 2 + 1, 3 + 2), q(1));
    }

    fn small_map(rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
        proptest::collection::vec(-2i64..=2, rows * cols).prop_map(move |v| {
            let m = Matrix::from_dense(Q, rows, cols, v.into_iter().map(q).collect()).unwrap();
            LinearMap::new(vec![cols], vec![rows], m).unwrap()
        })
    }

    proptest! {
        #[test]
        fn tensor_respects_composition(
            f in small_map(2, 3), f2 in small_map(3, 2),
            g in small_map(2, 2), g2 in small_map(2, 3),
        ) {
            let lhs = tensor(&f, &g).unwrap().then_after(&tensor(&f2, &g2).unwrap());
            let rhs = tensor(&f.then_after(&f2), &g.then_after(&g2)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
