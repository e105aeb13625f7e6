//! Reference implementations written directly from structure constants with
//! index loops, sharing nothing with the library's operator algebra.

#![allow(dead_code)]

use entwine::algcoalg::{FiniteAlgebra, FiniteCoalgebra};
use entwine::entwine::EntwiningStructure;
use entwine::exactla::{FieldSpec, Matrix, Scalar};

fn digits(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    out
}

fn index(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &d| acc * base + d)
}

fn mult_table(a: &FiniteAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let d = a.dim();
    let mut m = vec![vec![vec![Scalar::zero(a.field()); d]; d]; d];
    for (i, j, k, c) in a.triples() {
        m[i][j][k] = c;
    }
    m
}

fn comult_table(c: &FiniteCoalgebra) -> Vec<Vec<Vec<Scalar>>> {
    let d = c.dim();
    let mut m = vec![vec![vec![Scalar::zero(c.field()); d]; d]; d];
    for (i, j, k, v) in c.triples() {
        m[i][j][k] = v;
    }
    m
}

fn sign(field: FieldSpec, k: usize) -> Scalar {
    if k % 2 == 0 {
        Scalar::one(field)
    } else {
        Scalar::from_i64(field, -1)
    }
}

/// Hochschild `dⁿ: Hom(Aⁿ, A) → Hom(Aⁿ⁺¹, A)` with values in `A`,
/// `(df)(a₀,…,aₙ) = a₀f(a₁,…) + Σ(−1)ᵏ f(…,aₖ₋₁aₖ,…) + (−1)ⁿ⁺¹ f(a₀,…,aₙ₋₁)aₙ`.
pub fn hochschild(a: &FiniteAlgebra, n: usize) -> Matrix {
    let field = a.field();
    let d = a.dim();
    let m = mult_table(a);
    let (src_tuples, dst_tuples) = (d.pow(n as u32), d.pow(n as u32 + 1));
    let mut trip = Vec::new();
    for t_idx in 0..dst_tuples {
        let t = digits(t_idx, d, n + 1);
        for y in 0..d {
            // f = e_y ⊗ e_x^*
            for out in 0..d {
                let row = out * dst_tuples + t_idx;
                // a₀ f(a₁…aₙ)
                let x = index(&t[1..], d);
                trip.push((row, y * src_tuples + x, m[t[0]][y][out].clone()));
                // f(a₀…aₙ₋₁) aₙ
                let x = index(&t[..n], d);
                trip.push((row, y * src_tuples + x, &sign(field, n + 1) * &m[y][t[n]][out]));
            }
            for k in 1..=n {
                for z in 0..d {
                    let coeff = &m[t[k - 1]][t[k]][z];
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut s = t[..k - 1].to_vec();
                    s.push(z);
                    s.extend_from_slice(&t[k + 1..]);
                    let row = y * dst_tuples + t_idx;
                    trip.push((row, y * src_tuples + index(&s, d), &sign(field, k) * coeff));
                }
            }
        }
    }
    Matrix::from_triplets(field, d * dst_tuples, d * src_tuples, trip)
}

/// Cartier `d̄ⁿ: Hom(C, Cⁿ) → Hom(C, Cⁿ⁺¹)` with values in `C`,
/// `d̄f = (C⊗f)Δ + Σ(−1)ᵏ Δₖ f + (−1)ⁿ⁺¹ (f⊗C)Δ`.
pub fn cartier(c: &FiniteCoalgebra, n: usize) -> Matrix {
    let field = c.field();
    let d = c.dim();
    let delta = comult_table(c);
    let (src_tuples, dst_tuples) = (d.pow(n as u32), d.pow(n as u32 + 1));
    let mut trip = Vec::new();
    // f = e_y ⊗ e_x^* with y a tuple in Cⁿ, x ∈ C
    for y_idx in 0..src_tuples {
        let y = digits(y_idx, d, n);
        for x in 0..d {
            let col = y_idx * d + x;
            for p in 0..d {
                // (C⊗f)Δ: Δ(w) ∋ p⊗x gives p⊗y at input w
                for w in 0..d {
                    let coeff = &delta[w][p][x];
                    if !coeff.is_zero() {
                        let mut out = vec![p];
                        out.extend_from_slice(&y);
                        trip.push((index(&out, d) * d + w, col, coeff.clone()));
                    }
                }
                // (f⊗C)Δ: Δ(w) ∋ x⊗p gives y⊗p at input w
                for w in 0..d {
                    let coeff = &delta[w][x][p];
                    if !coeff.is_zero() {
                        let mut out = y.clone();
                        out.push(p);
                        trip.push((index(&out, d) * d + w, col, &sign(field, n + 1) * coeff));
                    }
                }
            }
            for k in 1..=n {
                for p in 0..d {
                    for q in 0..d {
                        let coeff = &delta[y[k - 1]][p][q];
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut out = y[..k - 1].to_vec();
                        out.push(p);
                        out.push(q);
                        out.extend_from_slice(&y[k..]);
                        trip.push((index(&out, d) * d + x, col, &sign(field, k) * coeff));
                    }
                }
            }
        }
    }
    Matrix::from_triplets(field, dst_tuples * d, src_tuples * d, trip)
}

/// Structure constants of an entwining structure as one flat parameter
/// vector: `μ`, `1`, `Δ`, `ε`, `ψ` in that order.
pub struct Params {
    pub a: usize,
    pub c: usize,
}

impl Params {
    pub fn new(e: &EntwiningStructure) -> Self {
        Params { a: e.dim_a(), c: e.dim_c() }
    }
    pub fn mu(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.a + j) * self.a + k
    }
    pub fn unit(&self, k: usize) -> usize {
        self.a.pow(3) + k
    }
    pub fn delta(&self, i: usize, j: usize, k: usize) -> usize {
        self.a.pow(3) + self.a + (i * self.c + j) * self.c + k
    }
    pub fn eps(&self, i: usize) -> usize {
        self.a.pow(3) + self.a + self.c.pow(3) + i
    }
    /// `ψ(c⊗a) ∋ x · a'⊗c'`
    pub fn psi(&self, c: usize, a: usize, a2: usize, c2: usize) -> usize {
        self.a.pow(3) + self.a + self.c.pow(3) + self.c + ((c * self.a + a) * self.a + a2) * self.c + c2
    }
    pub fn len(&self) -> usize {
        self.psi(self.c - 1, self.a - 1, self.a - 1, self.c - 1) + 1
    }
}

pub fn params_of(e: &EntwiningStructure) -> Vec<Scalar> {
    let p = Params::new(e);
    let field = e.field();
    let mut v = vec![Scalar::zero(field); p.len()];
    for (i, j, k, x) in e.algebra().triples() {
        v[p.mu(i, j, k)] = x;
    }
    for (k, x) in e.algebra().unit().into_iter().enumerate() {
        v[p.unit(k)] = x;
    }
    for (i, j, k, x) in e.coalgebra().triples() {
        v[p.delta(i, j, k)] = x;
    }
    for (k, x) in e.coalgebra().counit().into_iter().enumerate() {
        v[p.eps(k)] = x;
    }
    let psi = e.psi().matrix();
    for (row, col, x) in psi.entries() {
        let (c, a) = (col / p.a, col % p.a);
        let (a2, c2) = (row / p.c, row % p.c);
        v[p.psi(c, a, a2, c2)] = x.clone();
    }
    v
}

/// Every axiom of an entwining structure as a list of polynomial values
/// (each should vanish).
pub fn axioms(p: &Params, v: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    let (da, dc) = (p.a, p.c);
    let z = || Scalar::zero(field);
    let one = Scalar::one(field);
    let kr = |i: usize, j: usize| if i == j { one.clone() } else { z() };
    let mut out = Vec::new();
    // (xy)w = x(yw)
    for i in 0..da {
        for j in 0..da {
            for k in 0..da {
                for o in 0..da {
                    let mut s = z();
                    for m in 0..da {
                        s = s + &v[p.mu(i, j, m)] * &v[p.mu(m, k, o)] - &v[p.mu(j, k, m)] * &v[p.mu(i, m, o)];
                    }
                    out.push(s);
                }
            }
        }
    }
    // 1x = x = x1
    for i in 0..da {
        for o in 0..da {
            let (mut l, mut r) = (z(), z());
            for u in 0..da {
                l = l + &v[p.unit(u)] * &v[p.mu(u, i, o)];
                r = r + &v[p.unit(u)] * &v[p.mu(i, u, o)];
            }
            out.push(l - kr(i, o));
            out.push(r - kr(i, o));
        }
    }
    // (Δ⊗C)Δ = (C⊗Δ)Δ
    for i in 0..dc {
        for x in 0..dc {
            for y in 0..dc {
                for w in 0..dc {
                    let mut s = z();
                    for m in 0..dc {
                        s = s + &v[p.delta(i, m, w)] * &v[p.delta(m, x, y)] - &v[p.delta(i, x, m)] * &v[p.delta(m, y, w)];
                    }
                    out.push(s);
                }
            }
        }
    }
    // (ε⊗C)Δ = C = (C⊗ε)Δ
    for i in 0..dc {
        for o in 0..dc {
            let (mut l, mut r) = (z(), z());
            for u in 0..dc {
                l = l + &v[p.eps(u)] * &v[p.delta(i, u, o)];
                r = r + &v[p.eps(u)] * &v[p.delta(i, o, u)];
            }
            out.push(l - kr(i, o));
            out.push(r - kr(i, o));
        }
    }
    // ψ(c⊗xy) = x_α y_β ⊗ c^{αβ}
    for c in 0..dc {
        for x in 0..da {
            for y in 0..da {
                for ao in 0..da {
                    for co in 0..dc {
                        let mut l = z();
                        for m in 0..da {
                            l = l + &v[p.mu(x, y, m)] * &v[p.psi(c, m, ao, co)];
                        }
                        let mut r = z();
                        for a1 in 0..da {
                            for c1 in 0..dc {
                                let first = &v[p.psi(c, x, a1, c1)];
                                if first.is_zero() {
                                    continue;
                                }
                                for a2 in 0..da {
                                    r = r + &(first * &v[p.psi(c1, y, a2, co)]) * &v[p.mu(a1, a2, ao)];
                                }
                            }
                        }
                        out.push(l - r);
                    }
                }
            }
        }
    }
    // ψ(c⊗1) = 1⊗c
    for c in 0..dc {
        for ao in 0..da {
            for co in 0..dc {
                let mut l = z();
                for u in 0..da {
                    l = l + &v[p.unit(u)] * &v[p.psi(c, u, ao, co)];
                }
                out.push(l - &v[p.unit(ao)] * &kr(c, co));
            }
        }
    }
    // Δ-side: a_α ⊗ Δ(c^α) = a_{αβ} ⊗ c₁^β ⊗ c₂^α
    for c in 0..dc {
        for x in 0..da {
            for ao in 0..da {
                for o1 in 0..dc {
                    for o2 in 0..dc {
                        let mut l = z();
                        for m in 0..dc {
                            l = l + &v[p.psi(c, x, ao, m)] * &v[p.delta(m, o1, o2)];
                        }
                        let mut r = z();
                        for c1 in 0..dc {
                            for c2 in 0..dc {
                                let d = &v[p.delta(c, c1, c2)];
                                if d.is_zero() {
                                    continue;
                                }
                                for a1 in 0..da {
                                    r = r + &(d * &v[p.psi(c2, x, a1, o2)]) * &v[p.psi(c1, a1, ao, o1)];
                                }
                            }
                        }
                        out.push(l - r);
                    }
                }
            }
        }
    }
    // a_α ε(c^α) = ε(c) a
    for c in 0..dc {
        for x in 0..da {
            for ao in 0..da {
                let mut l = z();
                for m in 0..dc {
                    l = l + &v[p.psi(c, x, ao, m)] * &v[p.eps(m)];
                }
                out.push(l - &v[p.eps(c)] * &kr(x, ao));
            }
        }
    }
    out
}

/// Jacobian of [`axioms`] at `v`, by exact interpolation of the cubic
/// `t ↦ axioms(v + t·e_i)`: `F'(0) = (8(F(1) − F(−1)) − (F(2) − F(−2))) / 12`.
pub fn jacobian(p: &Params, v: &[Scalar], field: FieldSpec) -> Matrix {
    let twelfth = Scalar::from_i64(field, 12).inv().expect("char ≠ 2, 3");
    let eight = Scalar::from_i64(field, 8);
    let mut cols = Vec::new();
    for i in 0..v.len() {
        let at = |t: i64| {
            let mut w = v.to_vec();
            w[i] = &w[i] + &Scalar::from_i64(field, t);
            axioms(p, &w, field)
        };
        let (f1, fm1, f2, fm2) = (at(1), at(-1), at(2), at(-2));
        let col = (0..f1.len())
            .map(|r| {
                let d1 = &f1[r] - &fm1[r];
                let d2 = &f2[r] - &fm2[r];
                (&eight * &d1 - d2) * twelfth.clone()
            })
            .collect();
        cols.push(col);
    }
    let rows = cols.first().map(Vec::len).unwrap_or(0);
    Matrix::from_columns(field, rows, &cols)
}

/// Tangent vectors to the orbit of `GL(A) × GL(C)` acting by change of basis.
pub fn orbit_tangent(p: &Params, v: &[Scalar], field: FieldSpec) -> Vec<Vec<Scalar>> {
    let (da, dc) = (p.a, p.c);
    let mut out = Vec::new();
    // X = E_{rs} on A
    for r in 0..da {
        for s in 0..da {
            let mut t = vec![Scalar::zero(field); v.len()];
            for i in 0..da {
                for j in 0..da {
                    // Xμ − μ(X⊗1) − μ(1⊗X): (X e_s = e_r)
                    let x = &v[p.mu(i, j, s)];
                    t[p.mu(i, j, r)] = &t[p.mu(i, j, r)] + x;
                    if i == r {
                        for k in 0..da {
                            t[p.mu(s, j, k)] = &t[p.mu(s, j, k)] - &v[p.mu(r, j, k)];
                        }
                    }
                    if j == r {
                        for k in 0..da {
                            t[p.mu(i, s, k)] = &t[p.mu(i, s, k)] - &v[p.mu(i, r, k)];
                        }
                    }
                }
            }
            t[p.unit(r)] = &t[p.unit(r)] + &v[p.unit(s)];
            // (X⊗C)ψ − ψ(C⊗X)
            for c in 0..dc {
                for a in 0..da {
                    for c2 in 0..dc {
                        t[p.psi(c, a, r, c2)] = &t[p.psi(c, a, r, c2)] + &v[p.psi(c, a, s, c2)];
                        if a == r {
                            for a2 in 0..da {
                                t[p.psi(c, s, a2, c2)] = &t[p.psi(c, s, a2, c2)] - &v[p.psi(c, r, a2, c2)];
                            }
                        }
                    }
                }
            }
            out.push(t);
        }
    }
    // Y = E_{rs} on C
    for r in 0..dc {
        for s in 0..dc {
            let mut t = vec![Scalar::zero(field); v.len()];
            for i in 0..dc {
                for j in 0..dc {
                    // (Y⊗1)Δ + (1⊗Y)Δ − ΔY
                    t[p.delta(i, r, j)] = &t[p.delta(i, r, j)] + &v[p.delta(i, s, j)];
                    t[p.delta(i, j, r)] = &t[p.delta(i, j, r)] + &v[p.delta(i, j, s)];
                }
            }
            for j in 0..dc {
                for k in 0..dc {
                    t[p.delta(s, j, k)] = &t[p.delta(s, j, k)] - &v[p.delta(r, j, k)];
                }
            }
            t[p.eps(s)] = &t[p.eps(s)] - &v[p.eps(r)];
            // (A⊗Y)ψ − ψ(Y⊗A)
            for c in 0..dc {
                for a in 0..da {
                    for a2 in 0..da {
                        t[p.psi(c, a, a2, r)] = &t[p.psi(c, a, a2, r)] + &v[p.psi(c, a, a2, s)];
                    }
                }
            }
            for a in 0..da {
                for a2 in 0..da {
                    for c2 in 0..dc {
                        t[p.psi(s, a, a2, c2)] = &t[p.psi(s, a, a2, c2)] - &v[p.psi(r, a, a2, c2)];
                    }
                }
            }
            out.push(t);
        }
    }
    out
}
