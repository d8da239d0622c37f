use super::{FiniteGroup, GroupError};

/// Closure of `gens` under product and inverse, as a membership mask.
pub fn subgroup_from_generators(group: &FiniteGroup, gens: &[usize]) -> Result<Vec<bool>, GroupError> {
    if let Some(&bad) = gens.iter().find(|&&x| x >= group.order()) {
        return Err(GroupError::BadElement(bad));
    }
    let mut members = vec![false; group.order()];
    let mut queue = vec![group.identity()];
    members[group.identity()] = true;
    // Finite groups: closure under products alone suffices.
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = group.mul(x, s);
            if !members[y] {
                members[y] = true;
                queue.push(y);
            }
        }
    }
    Ok(members)
}

/// A group together with a verified normal subgroup and the element listing
/// used by the Cayley realization: identity first, then one left-coset
/// representative per remaining coset, then everything else coset by coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPair {
    group: FiniteGroup,
    members: Vec<bool>,
    index: usize,
    ordering: Vec<usize>,
    coset_of: Vec<usize>,
}

impl GroupPair {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn subgroup_order(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    /// `[G:H]`.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Position `p` holds the element listed `p`-th (0-based).
    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    /// Left coset number (0-based, matching the representative's position
    /// in `ordering`) of an element.
    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members[element]
    }
}

/// Verifies that `members` is a normal subgroup and builds the pair.
pub fn make_pair(group: FiniteGroup, members: Vec<bool>) -> Result<GroupPair, GroupError> {
    let n = group.order();
    if members.len() != n {
        return Err(GroupError::NotSubgroup(format!(
            "membership mask has length {}, group order is {n}",
            members.len()
        )));
    }
    if !members[group.identity()] {
        return Err(GroupError::NotSubgroup("identity missing".into()));
    }
    let elems: Vec<usize> = (0..n).filter(|&x| members[x]).collect();
    for &a in &elems {
        if !members[group.inv(a)] {
            return Err(GroupError::NotSubgroup(format!("inverse of {a} missing")));
        }
        for &b in &elems {
            if !members[group.mul(a, b)] {
                return Err(GroupError::NotSubgroup(format!(
                    "{a}*{b} = {} missing",
                    group.mul(a, b)
                )));
            }
        }
    }
    for a in 0..n {
        for &h in &elems {
            let image = group.mul(group.mul(a, h), group.inv(a));
            if !members[image] {
                return Err(GroupError::NotNormal {
                    conjugator: a,
                    member: h,
                    image,
                });
            }
        }
    }

    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    let candidates = std::iter::once(group.identity()).chain((0..n).filter(|&x| x != group.identity()));
    for r in candidates {
        if coset_of[r] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(r);
        let mut coset: Vec<usize> = elems.iter().map(|&h| group.mul(r, h)).collect();
        coset.sort_unstable();
        for &x in &coset {
            coset_of[x] = c;
        }
        cosets.push(coset);
    }
    let index = reps.len();
    let mut ordering = reps.clone();
    for (c, coset) in cosets.iter().enumerate() {
        ordering.extend(coset.iter().copied().filter(|&x| x != reps[c]));
    }
    debug_assert_eq!(ordering.len(), n);

    Ok(GroupPair {
        group,
        members,
        index,
        ordering,
        coset_of,
    })
}
