//! Brute-force subdigon enumeration: ground truth for hyper-Catalan counts
//! that never touches the closed form.
//!
//! A subdigon is either the null subdigon (a single roofed edge) or a central
//! polygon with subdigons glued to its non-roof sides. A node of arity `k`
//! stands for a central `(k+1)`-gon and contributes one to the `m_k`
//! component of the type; getting that correspondence wrong would silently
//! corrupt every cross-check, so it is fixed here and tested.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::typevec::TypeVec;

/// Rooted tree value for enumeration: a leaf or a node with `k >= 2` children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subdigon {
    Leaf,
    Node(Vec<Subdigon>),
}

impl Subdigon {
    /// Panelling constructor; arity is the number of children.
    pub fn node(children: Vec<Subdigon>) -> Subdigon {
        assert!(
            children.len() >= 2,
            "a central polygon has at least 2 panels"
        );
        Subdigon::Node(children)
    }

    pub fn arity(&self) -> Option<u32> {
        match self {
            Subdigon::Leaf => None,
            Subdigon::Node(children) => Some(children.len() as u32),
        }
    }

    /// Number of faces (internal nodes).
    pub fn faces(&self) -> u32 {
        match self {
            Subdigon::Leaf => 0,
            Subdigon::Node(children) => 1 + children.iter().map(Subdigon::faces).sum::<u32>(),
        }
    }
}

/// The type of a subdigon: a node of arity `k` contributes `kvec`, additively
/// over the panelling recursion.
pub fn accounting_type(s: &Subdigon) -> TypeVec {
    match s {
        Subdigon::Leaf => TypeVec::empty(),
        Subdigon::Node(children) => children
            .iter()
            .fold(TypeVec::basis(children.len() as u32), |acc, child| {
                acc.add(&accounting_type(child))
            }),
    }
}

/// Exhaustively generate every subdigon with at most `max_faces` faces and
/// arities at most `max_gon`, and count them by type. Desk-scale bounds
/// (`max_faces <= 6`) recommended.
pub fn enumerate_subdigons(max_faces: u32, max_gon: u32) -> BTreeMap<TypeVec, BigUint> {
    let mut counts: BTreeMap<TypeVec, BigUint> = BTreeMap::new();
    for level in enumerate_by_faces(max_faces, max_gon) {
        for tree in level {
            let ty = accounting_type(&tree);
            *counts.entry(ty).or_default() += BigUint::one();
        }
    }
    counts
}

/// All subdigons grouped by face count, `levels[n]` holding those with
/// exactly `n` faces.
pub fn enumerate_by_faces(max_faces: u32, max_gon: u32) -> Vec<Vec<Subdigon>> {
    assert!(max_gon >= 2);
    let mut levels: Vec<Vec<Subdigon>> = vec![vec![Subdigon::Leaf]];
    for n in 1..=max_faces {
        let mut level = Vec::new();
        for arity in 2..=max_gon {
            let mut chosen = Vec::with_capacity(arity as usize);
            fill_children(&levels, arity, n - 1, &mut chosen, &mut level);
        }
        levels.push(level);
    }
    levels
}

fn fill_children(
    levels: &[Vec<Subdigon>],
    slots: u32,
    faces_left: u32,
    chosen: &mut Vec<Subdigon>,
    out: &mut Vec<Subdigon>,
) {
    if slots == 0 {
        debug_assert_eq!(faces_left, 0);
        out.push(Subdigon::node(chosen.clone()));
        return;
    }
    // last slot takes whatever faces remain
    let range = if slots == 1 {
        faces_left..=faces_left
    } else {
        0..=faces_left
    };
    for f in range {
        for child in &levels[f as usize] {
            chosen.push(child.clone());
            fill_children(levels, slots - 1, faces_left - f, chosen, out);
            chosen.pop();
        }
    }
}
