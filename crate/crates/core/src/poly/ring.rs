use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::order::MonomialOrder;
use crate::arith::Field;
use crate::{Error, Result};

/// Identifier grammar shared with the text format: `[A-Za-z_][A-Za-z0-9_]*`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A polynomial ring: coefficient field, ordered variables, monomial order
/// and an optional nonnegative integer grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext<K: Field> {
    field: K,
    variables: Vec<String>,
    order: MonomialOrder,
    grading: Option<Vec<u32>>,
}

pub type Ring<K> = Arc<RingContext<K>>;

impl<K: Field> RingContext<K> {
    pub fn new(field: K, variables: Vec<String>, order: MonomialOrder, grading: Option<Vec<u32>>) -> Result<Ring<K>> {
        for (i, v) in variables.iter().enumerate() {
            if !is_valid_name(v) {
                return Err(Error::InvalidVariableName(v.clone()));
            }
            if variables[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        order.validate(variables.len())?;
        if let Some(w) = &grading {
            if w.len() != variables.len() {
                return Err(Error::GradingMismatch { expected: variables.len(), got: w.len() });
            }
        }
        Ok(Arc::new(RingContext { field, variables, order, grading }))
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn grading(&self) -> Option<&[u32]> {
        self.grading.as_deref()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn require_var(&self, name: &str) -> Result<usize> {
        self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_owned()))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring<K>> {
        Self::new(self.field.clone(), self.variables.clone(), order, self.grading.clone())
    }

    pub fn with_grading(&self, grading: Option<Vec<u32>>) -> Result<Ring<K>> {
        Self::new(self.field.clone(), self.variables.clone(), self.order.clone(), grading)
    }

    pub fn with_field<L: Field>(&self, field: L) -> Ring<L> {
        Arc::new(RingContext {
            field,
            variables: self.variables.clone(),
            order: self.order.clone(),
            grading: self.grading.clone(),
        })
    }

    /// Ring on `names` followed by the current variables; the new variables
    /// form a dominating grevlex block and get weight 0 in the grading.
    pub fn adjoin_front(&self, names: &[String]) -> Result<Ring<K>> {
        let mut vars = names.to_vec();
        vars.extend(self.variables.iter().cloned());
        let order = self.order.adjoin_front(self.nvars(), names.len());
        let grading = self.grading.as_ref().map(|w| {
            let mut g = alloc::vec![0; names.len()];
            g.extend_from_slice(w);
            g
        });
        Self::new(self.field.clone(), vars, order, grading)
    }

    /// Ring on the variables `keep` (ascending indices) with the induced order.
    pub fn restrict(&self, keep: &[usize]) -> Result<Ring<K>> {
        let vars = keep.iter().map(|&i| self.variables[i].clone()).collect();
        let order = self.order.restrict(self.nvars(), keep);
        let grading = self.grading.as_ref().map(|w| keep.iter().map(|&i| w[i]).collect());
        Self::new(self.field.clone(), vars, order, grading)
    }

    /// A variable name not used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        self.fresh_names(base, 1).pop().expect("one name")
    }

    pub fn fresh_names(&self, base: &str, count: usize) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        let mut k = 0usize;
        while out.len() < count {
            let candidate = if k == 0 { base.to_owned() } else { format!("{base}_{k}") };
            if self.var_index(&candidate).is_none() && !out.contains(&candidate) {
                out.push(candidate);
            }
            k += 1;
        }
        out
    }
}

/// Builds a ring over `field`.
pub fn make_ring<K: Field>(
    field: K,
    variables: &[&str],
    order: MonomialOrder,
    grading: Option<Vec<u32>>,
) -> Result<Ring<K>> {
    RingContext::new(field, variables.iter().map(|s| String::from(*s)).collect(), order, grading)
}

/// Same variables, order and grading; fields may differ.
pub(crate) fn same_shape<K: Field, L: Field>(a: &RingContext<K>, b: &RingContext<L>) -> bool {
    a.variables == b.variables && a.order == b.order && a.grading == b.grading
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalField;

    #[test]
    fn ring_examples() {
        let r = make_ring(RationalField, &["a11", "a12", "z1", "z2"], MonomialOrder::Grevlex, None).unwrap();
        assert_eq!(r.nvars(), 4);
        assert!(make_ring(RationalField, &["x"], MonomialOrder::Lex, None).is_ok());
        let g = make_ring(
            RationalField,
            &["a11", "a12", "z1", "z2", "T2"],
            MonomialOrder::Grevlex,
            Some(alloc::vec![0, 0, 0, 0, 1]),
        )
        .unwrap();
        assert_eq!(g.grading(), Some(&[0, 0, 0, 0, 1][..]));
        assert!(make_ring(RationalField, &[], MonomialOrder::Grevlex, None).is_ok());
    }

    #[test]
    fn ring_errors() {
        assert_eq!(
            make_ring(RationalField, &["x", "x"], MonomialOrder::Lex, None).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
        assert!(matches!(
            make_ring(RationalField, &["1x"], MonomialOrder::Lex, None),
            Err(Error::InvalidVariableName(_))
        ));
        assert!(matches!(
            make_ring(RationalField, &["x", "y"], MonomialOrder::Lex, Some(alloc::vec![1])),
            Err(Error::GradingMismatch { .. })
        ));
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = make_ring(RationalField, &["t", "t_1", "x"], MonomialOrder::Grevlex, None).unwrap();
        assert_eq!(r.fresh_names("t", 2), alloc::vec![String::from("t_2"), String::from("t_3")]);
        assert_eq!(r.fresh_name("u"), "u");
    }

    #[test]
    fn adjoin_then_restrict_is_identity() {
        let r = make_ring(RationalField, &["x", "y"], MonomialOrder::Lex, Some(alloc::vec![1, 2])).unwrap();
        let ext = r.adjoin_front(&[String::from("t")]).unwrap();
        assert_eq!(ext.grading(), Some(&[0, 1, 2][..]));
        assert_eq!(*ext.restrict(&[1, 2]).unwrap(), *r);
    }
}
