use crate::exactla::{Matrix, Scalar};

/// Matrix of the linear operator `f ↦ q ∘ (id_left ⊗ f ⊗ id_right) ∘ p` on
/// `Hom(X, Y)`, where `dim X = f_dom` and `dim Y = f_cod`.
///
/// Cochains are flattened row-major (`y * f_dom + x`), and so is the
/// resulting map. Almost every differential in the crate has this shape, so
/// building operators this way avoids materializing one composite per basis
/// cochain.
pub fn hom_operator(
    q: &Matrix,
    p: &Matrix,
    left: usize,
    right: usize,
    f_dom: usize,
    f_cod: usize,
) -> Matrix {
    assert_eq!(p.rows(), left * f_dom * right, "inner map does not land in the padded domain");
    assert_eq!(q.cols(), left * f_cod * right, "outer map does not start at the padded codomain");
    let field = q.field();
    let src = p.cols();
    let qt = q.transpose();
    let mut triplets: Vec<(usize, usize, Scalar)> = Vec::new();
    for u in 0..left {
        for v in 0..right {
            for s in 0..f_dom {
                let prow = p.row((u * f_dom + s) * right + v);
                if prow.is_empty() {
                    continue;
                }
                for r in 0..f_cod {
                    let qcol = qt.row((u * f_cod + r) * right + v);
                    let col = r * f_dom + s;
                    for (t, qv) in qcol {
                        for (sigma, pv) in prow {
                            triplets.push((t * src + sigma, col, qv * pv));
                        }
                    }
                }
            }
        }
    }
    Matrix::from_triplets(field, q.rows() * src, f_cod * f_dom, triplets)
}

/// `f ↦ q ∘ f ∘ p` on `Hom(X, Y)`.
pub fn sandwich(q: &Matrix, p: &Matrix) -> Matrix {
    hom_operator(q, p, 1, 1, p.rows(), q.cols())
}
