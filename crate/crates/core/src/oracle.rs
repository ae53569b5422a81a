//! Exact Farey graph distances computed independently of the ladder-window
//! pipeline, used to check translation lengths.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::farey::{ExtRational, FareyEdge};
use crate::ladder::walk;
use crate::matrix::MatrixPSL2Z;

/// `d(u, v)`: move `u` to 1/0 by an isometry and count ancestor steps of the
/// image of `v`.
pub fn farey_distance_ancestor(u: &ExtRational, v: &ExtRational) -> usize {
    let g = MatrixPSL2Z::completing(u).inverse();
    g.apply(v).ancestor_depth()
}

/// The rung of the fan at `u` that the geodesic towards `v` crosses first.
/// `v` must not be `u` or a neighbor of `u`.
fn first_rung(u: &ExtRational, v: &ExtRational) -> FareyEdge {
    let g = MatrixPSL2Z::completing(u);
    let k = g.inverse().apply(v).floor();
    let at = |x: BigInt| g.apply(&ExtRational::integer(x));
    FareyEdge::new(at(k.clone()), at(k + BigInt::one())).expect("consecutive fan vertices")
}

/// `d(u, v)` by breadth-first search in the ladder between `u` and `v`, with
/// every Farey edge among its vertices.
pub fn farey_distance_bfs(u: &ExtRational, v: &ExtRational) -> usize {
    if u == v {
        return 0;
    }
    if u.is_neighbor(v) {
        return 1;
    }
    let (near, far) = (first_rung(u, v), first_rung(v, u));
    let mut verts: Vec<ExtRational> = vec![u.clone(), v.clone()];
    let mut push = |x: &ExtRational| {
        if !verts.contains(x) {
            verts.push(x.clone());
        }
    };
    for x in near.endpoints().into_iter().chain(far.endpoints()) {
        push(x);
    }
    for step in walk(&near, &far) {
        for x in step.vertices() {
            push(x);
        }
    }
    bfs(&verts, 0, 1).expect("ladder is connected")
}

fn bfs(verts: &[ExtRational], from: usize, to: usize) -> Option<usize> {
    let adj: Vec<Vec<usize>> = (0..verts.len())
        .map(|i| (0..verts.len()).filter(|&j| j != i && verts[i].is_neighbor(&verts[j])).collect())
        .collect();
    let mut dist: HashMap<usize, usize> = HashMap::from([(from, 0)]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            return dist.get(&x).copied();
        }
        for &y in &adj[x] {
            if !dist.contains_key(&y) {
                dist.insert(y, dist[&x] + 1);
                queue.push_back(y);
            }
        }
    }
    None
}

/// `[d(v, f^j v) for j in 1..=count]`.
pub fn stable_length_probe(m: &MatrixPSL2Z, v: &ExtRational, count: u32) -> Result<Vec<usize>> {
    m.ensure_hyperbolic()?;
    let mut out = Vec::with_capacity(count as usize);
    let mut image = v.clone();
    for _ in 0..count {
        image = m.apply(&image);
        out.push(farey_distance_ancestor(v, &image));
    }
    Ok(out)
}
