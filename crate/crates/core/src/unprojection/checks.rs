use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::certificate::{polynomial_ring_certificate, residual_ideal, Certificate};
use super::family::UnprojectionFamily;
use crate::arith::Field;
use crate::groebner::{dimension, ideal_equal, Budget, Ideal};
use crate::ideal_ops::{algebra_map_kernel, intersect, largest_homogeneous_subideal, AlgebraMap};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// The fixed list of verification checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Residual,
    Intersection,
    CodimId,
    CodimIr,
    ReverseColon,
    KerPsi,
    BiggestHomog,
    Claim1,
    Cramer,
    Theorem,
    PolyringCert,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::Residual,
        CheckId::Intersection,
        CheckId::CodimId,
        CheckId::CodimIr,
        CheckId::ReverseColon,
        CheckId::KerPsi,
        CheckId::BiggestHomog,
        CheckId::Claim1,
        CheckId::Cramer,
        CheckId::Theorem,
        CheckId::PolyringCert,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Residual => "residual",
            CheckId::Intersection => "intersection",
            CheckId::CodimId => "codim_ID",
            CheckId::CodimIr => "codim_Ir",
            CheckId::ReverseColon => "reverse_colon",
            CheckId::KerPsi => "ker_psi",
            CheckId::BiggestHomog => "biggest_homog",
            CheckId::Claim1 => "claim1",
            CheckId::Cramer => "cramer",
            CheckId::Theorem => "theorem",
            CheckId::PolyringCert => "polyring_cert",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check id: {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    Timeout,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Timeout => "timeout",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pass" => Ok(CheckStatus::Pass),
            "fail" => Ok(CheckStatus::Fail),
            "timeout" => Ok(CheckStatus::Timeout),
            _ => Err(Error::InvalidArgument(format!("unknown status: {s}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: CheckId,
    pub status: CheckStatus,
    pub detail: String,
}

fn verdict(ok: bool, detail: String) -> (CheckStatus, String) {
    (if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
}

fn compare<K: Field>(what: &str, computed: &Ideal<K>, claimed: &Ideal<K>, budget: &Budget) -> Result<(CheckStatus, String)> {
    let eq = ideal_equal(computed, claimed, budget)?;
    let gb = computed.groebner_basis(budget)?;
    Ok(verdict(
        eq,
        format!(
            "{what}: computed reduced basis has {} elements; {} the claimed ideal ({} generators)",
            gb.len(),
            if eq { "equals" } else { "differs from" },
            claimed.generators().len()
        ),
    ))
}

fn with_gen<K: Field>(base: &Ideal<K>, extra: &[Polynomial<K>]) -> Result<Ideal<K>> {
    let mut gens = extra.to_vec();
    gens.extend(base.generators().iter().cloned());
    Ideal::new(base.ring(), gens)
}

/// Map `ψ`: `T_i ↦ z_i` into `ambient / I_X`.
pub fn psi_map<K: Field>(f: &UnprojectionFamily<K>) -> Result<AlgebraMap<K>> {
    let names: Vec<String> = (1..=f.n() + 1).map(|i| format!("T{i}")).collect();
    let images = names.iter().enumerate().map(|(i, s)| (s.as_str(), f.z(i + 1))).collect();
    AlgebraMap::new(f.ring_t(), f.ambient(), images, None, f.i_x().clone())
}

/// Map `φ`: `T_i ↦ z_i / z_1` (`i ≥ 2`) into `ambient / I_X` localized at `z_1`.
pub fn phi_map<K: Field>(f: &UnprojectionFamily<K>) -> Result<AlgebraMap<K>> {
    let names: Vec<String> = (2..=f.n() + 1).map(|i| format!("T{i}")).collect();
    let images = names.iter().enumerate().map(|(i, s)| (s.as_str(), f.z(i + 2))).collect();
    AlgebraMap::new(f.ring_phi(), f.ambient(), images, Some(f.z(1)), f.i_x().clone())
}

fn run<K: Field>(f: &UnprojectionFamily<K>, id: CheckId, budget: &Budget) -> Result<(CheckStatus, String)> {
    let n = f.n();
    match id {
        CheckId::Residual => {
            let r = residual_ideal(f.i_x(), f.i_d(), &f.z(1), budget)?;
            compare("((z1) + I_X) : I_D", &r, f.i_r(), budget)
        }
        CheckId::Intersection => {
            let cap = intersect(f.i_d(), f.i_r(), budget)?;
            compare("I_D cap I_r", &cap, &with_gen(f.i_x(), &[f.z(1)])?, budget)
        }
        CheckId::CodimId | CheckId::CodimIr => {
            let (name, sub) = if id == CheckId::CodimId { ("I_D", f.i_d()) } else { ("I_r", f.i_r()) };
            let dx = dimension(f.i_x(), budget)?;
            let ds = dimension(sub, budget)?;
            let expected_x = (n * (n + 1) + 1) as i64;
            let ok = dx - ds == 1 && (id == CheckId::CodimIr || dx == expected_x);
            Ok(verdict(ok, format!("dim I_X = {dx} (expected {expected_x}), dim {name} = {ds}, difference {}", dx - ds)))
        }
        CheckId::ReverseColon => {
            let r = residual_ideal(f.i_x(), f.i_r(), &f.z(1), budget)?;
            compare("((z1) + I_X) : I_r", &r, f.i_d(), budget)
        }
        CheckId::KerPsi => {
            let k = algebra_map_kernel(&psi_map(f)?, budget)?;
            compare("ker psi", &k, &f.claimed_ideals()?.ker_psi, budget)
        }
        CheckId::BiggestHomog => {
            let c = f.claimed_ideals()?;
            let h = largest_homogeneous_subideal(&c.ker_psi, &f.weights(), budget)?;
            compare("largest homogeneous subideal of ker psi", &h, &c.j, budget)
        }
        CheckId::Claim1 => {
            let rt = f.ring_t();
            let zt = |j: usize| f.z(j).to_ring(rt).expect("subring");
            let mut gens = Vec::new();
            for i in 1..=n + 1 {
                for j in i + 1..=n + 1 {
                    gens.push(&(&zt(i) * &f.t(j)) - &(&zt(j) * &f.t(i)));
                }
            }
            let minors = Ideal::new(rt, gens)?;
            let gb = minors.groebner_basis(budget)?;
            let mut bad = Vec::new();
            let mut total = 0;
            for k in 1..=n + 1 {
                for l in 1..=n {
                    let fl_z = f.forms()[l - 1].to_ring(rt)?;
                    let e = &(&zt(k) * &f.form_at_t(l)) - &(&f.t(k) * &fl_z);
                    total += 1;
                    if !gb.normal_form(&e).is_zero() {
                        bad.push(format!("({k},{l})"));
                    }
                }
            }
            Ok(verdict(bad.is_empty(), membership_detail("z_k f_l(T) - T_k f_l(z) in (z_i T_j - z_j T_i)", total, &bad)))
        }
        CheckId::Cramer => {
            let target = with_gen(f.i_x(), &[f.z(1)])?;
            let gb = target.groebner_basis(budget)?;
            let mut bad = Vec::new();
            for j in 1..=n + 1 {
                if !gb.normal_form(&(f.delta1() * &f.z(j))).is_zero() {
                    bad.push(format!("j={j}"));
                }
            }
            Ok(verdict(bad.is_empty(), membership_detail("Delta1*z_j in (z1) + I_X", n + 1, &bad)))
        }
        CheckId::Theorem => {
            let k = algebra_map_kernel(&phi_map(f)?, budget)?;
            compare("ker phi", &k, &f.claimed_ideals()?.ker_phi, budget)
        }
        CheckId::PolyringCert => {
            let c = f.claimed_ideals()?;
            let elim = f.certificate_eliminated();
            let refs: Vec<&str> = elim.iter().map(String::as_str).collect();
            let expected = f.certificate_residual();
            match polynomial_ring_certificate(&c.ker_phi, &refs, budget)? {
                Certificate::Pass { residual } => {
                    let ok = residual == expected;
                    Ok(verdict(ok, format!("presentation solved; residual variables [{}], expected [{}]", residual.join(", "), expected.join(", "))))
                }
                Certificate::Fail { reason } => Ok((CheckStatus::Fail, format!("certificate failed: {reason}"))),
            }
        }
    }
}

fn membership_detail(what: &str, total: usize, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{what}: all {total} memberships hold")
    } else {
        format!("{what}: {} of {total} fail: {}", bad.len(), bad.join(" "))
    }
}

/// Runs one check. Budget exhaustion is reported as a timeout status;
/// any other engine error is reported as a failure with its message.
pub fn verify_claim<K: Field>(f: &UnprojectionFamily<K>, id: CheckId, budget: &Budget) -> CheckOutcome {
    let (status, detail) = match run(f, id, budget) {
        Ok(r) => r,
        Err(Error::Timeout) => (CheckStatus::Timeout, "resource budget exhausted".into()),
        Err(e) => (CheckStatus::Fail, format!("error: {e}")),
    };
    CheckOutcome { id, status, detail }
}

/// Runs every check in order on the current thread.
pub fn verify_all_sequential<K: Field>(f: &UnprojectionFamily<K>, budget: &Budget) -> Vec<CheckOutcome> {
    CheckId::ALL.iter().map(|&id| verify_claim(f, id, budget)).collect()
}
