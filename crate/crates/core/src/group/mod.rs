//! Finite groups stored as Cayley tables, plus normal-subgroup pairs and
//! pair isomorphism.

mod iso;
mod named;
mod pair;
mod spec;

pub use iso::{pair_isomorphic, pair_isomorphic_capped, ElementPermutation, DEFAULT_ISO_CAP};
pub use named::{named_group, permutations_lex, GroupFamily};
pub use pair::{make_pair, subgroup_from_generators, GroupPair};
pub use spec::{parse_cayley_table, parse_group_spec, parse_subgroup_spec, render_cayley_table, SubgroupSpec};

use thiserror::Error;

/// Why a table fails the group axioms.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("row {0} is not a permutation (not a Latin square)")]
    RowRepeat(usize),
    #[error("column {0} is not a permutation (not a Latin square)")]
    ColumnRepeat(usize),
    #[error("({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity")]
    NoIdentity,
}

/// Largest group order accepted by the constructors.
pub const MAX_ORDER: usize = 5040;

/// Associativity is checked exhaustively up to this order.
pub const ASSOCIATIVITY_CHECK_MAX: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(Violation),
    #[error("unsupported group spec: {0}")]
    UnsupportedSpec(String),
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {conjugator}*{member}*{conjugator}^-1 = {image} lies outside H")]
    NotNormal {
        conjugator: usize,
        member: usize,
        image: usize,
    },
    #[error("element index {0} out of range")]
    BadElement(usize),
    #[error("group of order {order} exceeds the isomorphism search cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("cannot parse Cayley table: {0}")]
    Parse(String),
}

/// A finite group given by its multiplication table over element indices
/// `0..order`. `table[a * order + b]` is the index of `a * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a square table and locates identity and inverses.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::NotAGroup(Violation::Empty));
        }
        if order > MAX_ORDER {
            return Err(GroupError::UnsupportedSpec(format!(
                "order {order} exceeds the maximum {MAX_ORDER}"
            )));
        }
        let mut table = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotAGroup(Violation::Ragged {
                    row: a,
                    len: row.len(),
                    expected: order,
                }));
            }
            for &x in row {
                if x >= order {
                    return Err(GroupError::BadElement(x));
                }
                table.push(x as u16);
            }
        }
        Self::from_flat(order, table)
    }

    pub(crate) fn from_flat(order: usize, table: Vec<u16>) -> Result<Self, GroupError> {
        debug_assert_eq!(table.len(), order * order);
        let at = |a: usize, b: usize| table[a * order + b] as usize;

        // Latin square.
        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let x = at(a, b);
                if seen[x] == a {
                    return Err(GroupError::NotAGroup(Violation::RowRepeat(a)));
                }
                seen[x] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..order {
            for a in 0..order {
                let x = at(a, b);
                if seen[x] == b {
                    return Err(GroupError::NotAGroup(Violation::ColumnRepeat(b)));
                }
                seen[x] = b;
            }
        }

        if order <= ASSOCIATIVITY_CHECK_MAX {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::NotAGroup(Violation::NonAssociative { a, b, c }));
                        }
                    }
                }
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(GroupError::NotAGroup(Violation::NoIdentity))?;

        // Latin rows guarantee exactly one solution.
        let inverse = (0..order)
            .map(|a| (0..order).find(|&b| at(a, b) == identity).unwrap())
            .collect();

        Ok(Self {
            order,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    /// Table rows as nested vectors.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Direct product; element `(a, b)` has index `a * rhs.order() + b`.
    pub fn direct_product(&self, rhs: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
        let n = self.order * rhs.order;
        if n > MAX_ORDER {
            return Err(GroupError::UnsupportedSpec(format!(
                "product order {n} exceeds the maximum {MAX_ORDER}"
            )));
        }
        let m = rhs.order;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let a = self.mul(x / m, y / m);
                let b = rhs.mul(x % m, y % m);
                table.push((a * m + b) as u16);
            }
        }
        FiniteGroup::from_flat(n, table)
    }
}
