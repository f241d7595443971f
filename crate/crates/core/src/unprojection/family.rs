use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::Field;
use crate::groebner::Ideal;
use crate::poly::{MonomialOrder, PolyMatrix, Polynomial, Ring, RingContext};
use crate::{Error, Result};

/// The generic family for a given `n`: an `n × (n+1)` matrix `M` of
/// indeterminates `a_ij`, variables `z_1..z_{n+1}`, forms
/// `f_i = Σ_j a_ij z_j` and the minor `Δ₁` of `M` without its first column.
///
/// Variables are ordered `a11 > a12 > … > z1 > … > T1 > …`; all rings use
/// grevlex. The extended rings grade `T_i` by 1 and everything else by 0.
#[derive(Clone, Debug)]
pub struct UnprojectionFamily<K: Field> {
    n: usize,
    ambient: Ring<K>,
    ring_t: Ring<K>,
    ring_phi: Ring<K>,
    matrix: PolyMatrix<K>,
    forms: Vec<Polynomial<K>>,
    delta1: Polynomial<K>,
    i_x: Ideal<K>,
    i_d: Ideal<K>,
    i_r: Ideal<K>,
}

/// The right-hand sides asserted for the kernels and the homogeneous ideal.
#[derive(Clone, Debug)]
pub struct ClaimedIdeals<K: Field> {
    pub ker_psi: Ideal<K>,
    pub j: Ideal<K>,
    pub ker_phi: Ideal<K>,
}

pub fn a_name(n: usize, i: usize, j: usize) -> String {
    if n + 1 >= 10 {
        format!("a{i}_{j}")
    } else {
        format!("a{i}{j}")
    }
}

fn names(n: usize, t_from: Option<usize>) -> Vec<String> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in 1..=n + 1 {
            v.push(a_name(n, i, j));
        }
    }
    v.extend((1..=n + 1).map(|j| format!("z{j}")));
    if let Some(start) = t_from {
        v.extend((start..=n + 1).map(|j| format!("T{j}")));
    }
    v
}

fn graded<K: Field>(field: &K, vars: Vec<String>) -> Result<Ring<K>> {
    let w = vars.iter().map(|v| u32::from(v.starts_with('T'))).collect();
    RingContext::new(field.clone(), vars, MonomialOrder::Grevlex, Some(w))
}

pub fn build_generic_family<K: Field>(field: K, n: usize) -> Result<UnprojectionFamily<K>> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("n must be at least 1, got {n}")));
    }
    let ambient = RingContext::new(field.clone(), names(n, None), MonomialOrder::Grevlex, None)?;
    let ring_t = graded(&field, names(n, Some(1)))?;
    let ring_phi = graded(&field, names(n, Some(2)))?;

    let a = |i: usize, j: usize| Polynomial::var(&ambient, (i - 1) * (n + 1) + (j - 1));
    let z = |j: usize| Polynomial::var(&ambient, n * (n + 1) + j - 1);
    let rows: Vec<Vec<Polynomial<K>>> = (1..=n).map(|i| (1..=n + 1).map(|j| a(i, j)).collect()).collect();
    let matrix = PolyMatrix::from_rows(&ambient, rows)?;
    let forms: Vec<Polynomial<K>> = (1..=n)
        .map(|i| (1..=n + 1).fold(Polynomial::zero(&ambient), |acc, j| &acc + &(&a(i, j) * &z(j))))
        .collect();
    let delta1 = matrix.delete_column(0).determinant()?;

    let i_x = Ideal::new(&ambient, forms.clone())?;
    let mut d_gens: Vec<Polynomial<K>> = (1..=n + 1).map(z).collect();
    d_gens.extend(forms.iter().cloned());
    let i_d = Ideal::new(&ambient, d_gens)?;
    let mut r_gens = alloc::vec![z(1), delta1.clone()];
    r_gens.extend(forms.iter().cloned());
    let i_r = Ideal::new(&ambient, r_gens)?;

    Ok(UnprojectionFamily { n, ambient, ring_t, ring_phi, matrix, forms, delta1, i_x, i_d, i_r })
}

impl<K: Field> UnprojectionFamily<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ring on the `a_ij` and `z_j`.
    pub fn ambient(&self) -> &Ring<K> {
        &self.ambient
    }

    /// Ambient ring with `T_1..T_{n+1}` adjoined.
    pub fn ring_t(&self) -> &Ring<K> {
        &self.ring_t
    }

    /// Ambient ring with `T_2..T_{n+1}` adjoined.
    pub fn ring_phi(&self) -> &Ring<K> {
        &self.ring_phi
    }

    pub fn matrix(&self) -> &PolyMatrix<K> {
        &self.matrix
    }

    /// `f_1(z) .. f_n(z)`.
    pub fn forms(&self) -> &[Polynomial<K>] {
        &self.forms
    }

    pub fn delta1(&self) -> &Polynomial<K> {
        &self.delta1
    }

    pub fn i_x(&self) -> &Ideal<K> {
        &self.i_x
    }

    /// `(z_1..z_{n+1}) + I_X`.
    pub fn i_d(&self) -> &Ideal<K> {
        &self.i_d
    }

    /// `(z_1, Δ₁) + I_X`, the asserted residual ideal.
    pub fn i_r(&self) -> &Ideal<K> {
        &self.i_r
    }

    /// `w(T_i) = 1`, all else 0, on [`Self::ring_t`].
    pub fn weights(&self) -> Vec<u32> {
        self.ring_t.grading().expect("graded").to_vec()
    }

    pub fn a(&self, i: usize, j: usize) -> Polynomial<K> {
        Polynomial::var(&self.ambient, (i - 1) * (self.n + 1) + (j - 1))
    }

    pub fn z(&self, j: usize) -> Polynomial<K> {
        Polynomial::var(&self.ambient, self.n * (self.n + 1) + j - 1)
    }

    /// `T_j` in [`Self::ring_t`].
    pub fn t(&self, j: usize) -> Polynomial<K> {
        Polynomial::var(&self.ring_t, self.n * (self.n + 1) + self.n + j)
    }

    /// `f_i` evaluated at `(T_1..T_{n+1})`, in [`Self::ring_t`].
    pub fn form_at_t(&self, i: usize) -> Polynomial<K> {
        let r = &self.ring_t;
        (1..=self.n + 1).fold(Polynomial::zero(r), |acc, j| {
            &acc + &(&self.a(i, j).to_ring(r).expect("subring") * &self.t(j))
        })
    }

    /// `f_i(1, T_2..T_{n+1})`, in [`Self::ring_phi`].
    pub fn form_dehomogenized(&self, i: usize) -> Polynomial<K> {
        let r = &self.ring_phi;
        let base = self.n * (self.n + 1) + self.n + 1;
        let lift = |p: Polynomial<K>| p.to_ring(r).expect("subring");
        (2..=self.n + 1).fold(lift(self.a(i, 1)), |acc, j| {
            &acc + &(&lift(self.a(i, j)) * &Polynomial::var(r, base + j - 2))
        })
    }

    /// The ideals asserted to be `ker ψ`, `J` and `ker φ`.
    pub fn claimed_ideals(&self) -> Result<ClaimedIdeals<K>> {
        let n = self.n;
        let rt = &self.ring_t;
        let zt = |j: usize| self.z(j).to_ring(rt).expect("subring");
        let forms_t: Vec<Polynomial<K>> = self.forms.iter().map(|f| f.to_ring(rt).expect("subring")).collect();

        let mut psi: Vec<Polynomial<K>> = (1..=n + 1).map(|i| &self.t(i) - &zt(i)).collect();
        psi.extend(forms_t.iter().cloned());

        let mut j_gens = Vec::new();
        for i in 1..=n + 1 {
            for j in i + 1..=n + 1 {
                j_gens.push(&(&zt(i) * &self.t(j)) - &(&zt(j) * &self.t(i)));
            }
        }
        j_gens.extend(forms_t.iter().cloned());
        j_gens.extend((1..=n).map(|i| self.form_at_t(i)));

        let rp = &self.ring_phi;
        let base = n * (n + 1) + n + 1;
        let zp = |j: usize| self.z(j).to_ring(rp).expect("subring");
        let mut phi: Vec<Polynomial<K>> =
            (2..=n + 1).map(|i| &zp(i) - &(&zp(1) * &Polynomial::var(rp, base + i - 2))).collect();
        phi.extend((1..=n).map(|i| self.form_dehomogenized(i)));

        Ok(ClaimedIdeals {
            ker_psi: Ideal::new(rt, psi)?,
            j: Ideal::new(rt, j_gens)?,
            ker_phi: Ideal::new(rp, phi)?,
        })
    }

    /// Cramer witness for `j ≥ 2`: the `p` with `Δ₁·z_j − z_1·p ∈ I_X`,
    /// namely `p = −det(B with column j−1 replaced by the first column of M)`
    /// where `B` is `M` without its first column.
    pub fn cramer_witness(&self, j: usize) -> Result<Polynomial<K>> {
        if j < 2 || j > self.n + 1 {
            return Err(Error::InvalidArgument(format!("witness index {j} outside 2..={}", self.n + 1)));
        }
        let b = self.matrix.delete_column(0);
        let c = self.matrix.column(0);
        Ok(-&b.replace_column(j - 2, &c).determinant()?)
    }

    /// Names of the `a_i1`, then `z_2..z_{n+1}`: the variables solved for by
    /// the presentation of `ker φ`.
    pub fn certificate_eliminated(&self) -> Vec<String> {
        let mut e: Vec<String> = (2..=self.n + 1).map(|j| format!("z{j}")).collect();
        e.extend((1..=self.n).map(|i| a_name(self.n, i, 1)));
        e
    }

    /// Expected free variables once the presentation is solved:
    /// `a_ij` for `j ≥ 2`, `z_1`, `T_2..T_{n+1}`, in ring order.
    pub fn certificate_residual(&self) -> Vec<String> {
        let elim = self.certificate_eliminated();
        self.ring_phi.variables().iter().filter(|v| !elim.contains(v)).cloned().collect()
    }
}
