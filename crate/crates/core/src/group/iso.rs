use super::{subgroup_from_generators, FiniteGroup, GroupError, GroupPair};

/// Default order cap for [`pair_isomorphic_capped`].
pub const DEFAULT_ISO_CAP: usize = 48;

/// A bijection between element indices, `images[a]` being the image of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementPermutation {
    pub images: Vec<usize>,
}

impl ElementPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images
            .iter()
            .all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
    }
}

/// Greedy generating sequence: repeatedly add the smallest element outside
/// the closure of those chosen so far.
pub(crate) fn greedy_generators(group: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = vec![false; group.order()];
    closure[group.identity()] = true;
    for x in 0..group.order() {
        if !closure[x] {
            gens.push(x);
            closure = subgroup_from_generators(group, &gens).expect("indices in range");
        }
    }
    gens
}

struct Search<'a> {
    src: &'a GroupPair,
    dst: &'a GroupPair,
    gens: Vec<usize>,
    src_orders: Vec<usize>,
    dst_orders: Vec<usize>,
    images: Vec<usize>,
}

impl Search<'_> {
    /// Extends the map over the subgroup generated by the first `k` generators
    /// using their chosen images; `None` if the assignment is not an
    /// injective homomorphism respecting subgroup membership.
    fn extend(&self, k: usize) -> Option<Vec<usize>> {
        let g = self.src.group();
        let h = self.dst.group();
        let mut map = vec![usize::MAX; g.order()];
        let mut used = vec![false; h.order()];
        map[g.identity()] = h.identity();
        used[h.identity()] = true;
        let mut queue = vec![g.identity()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for i in 0..k {
                let xs = g.mul(x, self.gens[i]);
                let ys = h.mul(map[x], self.images[i]);
                if map[xs] == usize::MAX {
                    if used[ys] || self.src.contains(xs) != self.dst.contains(ys) {
                        return None;
                    }
                    map[xs] = ys;
                    used[ys] = true;
                    queue.push(xs);
                } else if map[xs] != ys {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self, k: usize) -> Option<Vec<usize>> {
        if k == self.gens.len() {
            return self.extend(k);
        }
        let x = self.gens[k];
        let want_order = self.src_orders[x];
        let want_member = self.src.contains(x);
        for y in 0..self.dst.group().order() {
            if self.dst_orders[y] != want_order || self.dst.contains(y) != want_member {
                continue;
            }
            self.images.push(y);
            if self.extend(k + 1).is_some() {
                if let Some(map) = self.run(k + 1) {
                    return Some(map);
                }
            }
            self.images.pop();
        }
        None
    }
}

/// Searches for an isomorphism `G -> G'` carrying `H` onto `H'`.
pub fn pair_isomorphic(p: &GroupPair, q: &GroupPair) -> Option<ElementPermutation> {
    let (g, h) = (p.group(), q.group());
    if g.order() != h.order() || p.subgroup_order() != q.subgroup_order() {
        return None;
    }
    let src_orders = g.element_orders();
    let dst_orders = h.element_orders();
    let mut hist_src = vec![(0usize, 0usize); g.order() + 1];
    let mut hist_dst = hist_src.clone();
    for x in 0..g.order() {
        let s = &mut hist_src[src_orders[x]];
        if p.contains(x) {
            s.0 += 1
        } else {
            s.1 += 1
        }
        let d = &mut hist_dst[dst_orders[x]];
        if q.contains(x) {
            d.0 += 1
        } else {
            d.1 += 1
        }
    }
    if hist_src != hist_dst {
        return None;
    }
    let mut search = Search {
        src: p,
        dst: q,
        gens: greedy_generators(g),
        src_orders,
        dst_orders,
        images: Vec::new(),
    };
    search.run(0).map(|images| ElementPermutation { images })
}

/// [`pair_isomorphic`] refusing groups larger than `cap`.
pub fn pair_isomorphic_capped(
    p: &GroupPair,
    q: &GroupPair,
    cap: usize,
) -> Result<Option<ElementPermutation>, GroupError> {
    for order in [p.group().order(), q.group().order()] {
        if order > cap {
            return Err(GroupError::GroupTooLarge { order, cap });
        }
    }
    Ok(pair_isomorphic(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_pair, named_group, GroupFamily};

    fn pair(fam: GroupFamily, gens: &[usize]) -> GroupPair {
        let g = named_group(&fam).unwrap();
        let h = subgroup_from_generators(&g, gens).unwrap();
        make_pair(g, h).unwrap()
    }

    fn check_witness(p: &GroupPair, q: &GroupPair, w: &ElementPermutation) {
        assert!(w.is_bijection());
        let (g, h) = (p.group(), q.group());
        for a in 0..g.order() {
            assert_eq!(p.contains(a), q.contains(w.apply(a)));
            for b in 0..g.order() {
                assert_eq!(w.apply(g.mul(a, b)), h.mul(w.apply(a), w.apply(b)));
            }
        }
    }

    #[test]
    fn s3_matches_d6() {
        let s3 = pair(GroupFamily::Symmetric(3), &[3]);
        let d6 = pair(GroupFamily::Dihedral(6), &[1]);
        let w = pair_isomorphic(&s3, &d6).expect("S3 and D6 are isomorphic");
        check_witness(&s3, &d6, &w);
    }

    #[test]
    fn c4_vs_klein() {
        let c4 = pair(GroupFamily::Cyclic(4), &[2]);
        let v4 = pair(
            GroupFamily::Product(Box::new(GroupFamily::Cyclic(2)), Box::new(GroupFamily::Cyclic(2))),
            &[1],
        );
        assert!(pair_isomorphic(&c4, &v4).is_none());
        assert!(pair_isomorphic(&v4, &c4).is_none());
    }

    #[test]
    fn self_isomorphism() {
        let q = pair(GroupFamily::Quaternion8, &[2]);
        let w = pair_isomorphic(&q, &q).unwrap();
        check_witness(&q, &q, &w);
    }

    #[test]
    fn subgroup_must_correspond() {
        // Klein four: all order-2 subgroups are equivalent under Aut.
        let v = || GroupFamily::Product(Box::new(GroupFamily::Cyclic(2)), Box::new(GroupFamily::Cyclic(2)));
        let a = pair(v(), &[1]);
        let b = pair(v(), &[3]);
        check_witness(&a, &b, &pair_isomorphic(&a, &b).unwrap());
        // C4 with trivial vs with C2 subgroups differ.
        let c = pair(GroupFamily::Cyclic(4), &[]);
        let d = pair(GroupFamily::Cyclic(4), &[2]);
        assert!(pair_isomorphic(&c, &d).is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let s4 = pair(GroupFamily::Symmetric(4), &[]);
        assert!(pair_isomorphic_capped(&s4, &s4, 24).unwrap().is_some());
        assert_eq!(
            pair_isomorphic_capped(&s4, &s4, 12),
            Err(GroupError::GroupTooLarge { order: 24, cap: 12 })
        );
    }

    #[test]
    fn greedy_generators_are_short() {
        for fam in [
            GroupFamily::Symmetric(4),
            GroupFamily::Dihedral(12),
            GroupFamily::Cyclic(12),
        ] {
            let g = named_group(&fam).unwrap();
            let gens = greedy_generators(&g);
            assert!((1usize << gens.len()) <= g.order());
            let closure = subgroup_from_generators(&g, &gens).unwrap();
            assert!(closure.iter().all(|&x| x));
        }
    }
}
