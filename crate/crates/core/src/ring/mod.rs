//! Sparse multivariate polynomial rings over the rationals.
//!
//! A [`RingCtx`] fixes a variable arena (names in storage order) together
//! with a monomial order. Every [`Polynomial`] holds a shared reference to
//! its ring; arithmetic across different rings is a caller bug and panics.
//! Movement between rings goes through [`Substitution`], which maps source
//! variables to image polynomials in an explicit target ring.
//!
//! The only monomial order implemented is lexicographic with an explicit
//! variable priority. Rings are typically built with the priority equal to
//! the storage order ([`RingCtx::lex`]); a distinct priority permutation is
//! supported so that an order can be described independently of how a ring
//! was declared.

mod monomial;
mod perm;
mod poly;
mod text;

pub use monomial::Monomial;
pub use perm::{apply_permutation, is_invariant, symmetrize, Permutation};
pub use poly::{Polynomial, Substitution};
pub use text::read_polynomials;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Kind of monomial order. Only lexicographic comparison exists today; the
/// enum keeps order identity explicit in stored basis files.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
}

impl OrderKind {
    /// Stable text tag used in stored basis files.
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
        }
    }
}

/// A monomial order: a comparison kind plus the variable priority, listed
/// from the greatest variable to the least as indices into the ring's
/// variable arena.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Variable indices from greatest to least.
    pub fn priority(&self) -> &[usize] {
        &self.priority
    }
}

/// A polynomial ring: named variables plus a monomial order over them.
///
/// `RingCtx` values are immutable and shared behind an [`Arc`]; two rings
/// compare equal when their variable lists and orders agree, regardless of
/// allocation identity.
#[derive(Debug)]
pub struct RingCtx {
    vars: Vec<String>,
    order: MonomialOrder,
    index: HashMap<String, usize>,
}

impl PartialEq for RingCtx {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order
    }
}

impl Eq for RingCtx {}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingCtx {
    /// Lexicographic ring whose variable priority is the storage order:
    /// `names[0]` is the greatest variable.
    ///
    /// Panics when a name is repeated or is not an identifier; the variable
    /// arena is static configuration, so malformed input is a caller bug.
    pub fn lex(names: &[&str]) -> Arc<Self> {
        let priority = (0..names.len()).collect();
        Self::build(names, priority)
    }

    /// Lexicographic ring with an explicit priority permutation given as
    /// variable names from greatest to least.
    pub fn lex_with_priority(names: &[&str], greatest_first: &[&str]) -> Arc<Self> {
        assert_eq!(
            names.len(),
            greatest_first.len(),
            "priority must mention every variable exactly once"
        );
        let lookup: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, name)| (*name, i))
            .collect();
        let mut seen = vec![false; names.len()];
        let priority = greatest_first
            .iter()
            .map(|name| {
                let i = *lookup
                    .get(name)
                    .unwrap_or_else(|| panic!("priority names unknown variable `{name}`"));
                assert!(!seen[i], "priority repeats variable `{name}`");
                seen[i] = true;
                i
            })
            .collect();
        Self::build(names, priority)
    }

    fn build(names: &[&str], priority: Vec<usize>) -> Arc<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            assert!(valid_var_name(name), "invalid variable name `{name}`");
            let previous = index.insert(name.to_string(), i);
            assert!(previous.is_none(), "duplicate variable name `{name}`");
        }
        Arc::new(RingCtx {
            vars: names.iter().map(|s| s.to_string()).collect(),
            order: MonomialOrder {
                kind: OrderKind::Lex,
                priority,
            },
            index,
        })
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Variable names in storage order.
    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Compare two monomials of this ring under the ring's order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), self.arity());
        debug_assert_eq!(b.arity(), self.arity());
        for &v in &self.order.priority {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                unequal => return unequal,
            }
        }
        Ordering::Equal
    }

    /// Exponents of `m` rearranged into priority order, so that plain slice
    /// comparison agrees with [`RingCtx::cmp`]. Used as a sorting key.
    pub fn order_key(&self, m: &Monomial) -> Vec<u32> {
        self.order.priority.iter().map(|&v| m.exp(v)).collect()
    }
}

/// True when both polynomials live in the same ring (identical arena and
/// order). Shared `Arc`s take the fast path.
pub fn same_ring(a: &Arc<RingCtx>, b: &Arc<RingCtx>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RingCtx {
    /// Parse a polynomial in this ring from canonical or free-form text.
    pub fn parse(self: &Arc<Self>, input: &str) -> Result<Polynomial> {
        text::parse(self, input)
    }

    /// The polynomial consisting of a single named variable.
    pub fn var(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        let i = self.var_index(name).ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            position: 0,
        })?;
        Ok(Polynomial::from_terms(
            self,
            [(crate::rational::int(1), Monomial::var(self.arity(), i))],
        ))
    }
}
