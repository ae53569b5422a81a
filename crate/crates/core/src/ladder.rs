//! Finite ladders of Farey triangles.
//!
//! A ladder between two edges is the chain of Farey triangles a geodesic
//! crosses on its way from the first edge to the second. Consecutive triangles
//! that share a vertex on the same side form a block; the block sizes are the
//! ladder's type and the shared vertices are its pivots.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{in_open_arc, ExtRational, FareyEdge};
use crate::matrix::MatrixPSL2Z;

/// A finite ladder.
///
/// `pivots` holds the start-rung vertex left behind by the first triangle, one
/// pivot per block, and the apex of the last triangle, so
/// `pivots.len() == types.len() + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ladder {
    pub pivots: Vec<ExtRational>,
    pub types: Vec<u64>,
    #[serde(rename = "start")]
    pub start_rung: FareyEdge,
    #[serde(rename = "end")]
    pub end_rung: FareyEdge,
}

/// One triangle of a ladder walk: the rung it is entered through, the new
/// apex, and the vertex of the entry rung that it shares with the exit rung.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub entry: FareyEdge,
    pub apex: ExtRational,
    pub retained: ExtRational,
}

impl Step {
    pub fn vertices(&self) -> [&ExtRational; 3] {
        [self.entry.u(), self.entry.v(), &self.apex]
    }

    pub fn exit(&self) -> FareyEdge {
        FareyEdge::new(self.retained.clone(), self.apex.clone()).expect("triangle side")
    }
}

fn endpoint_outside<'a>(e: &'a FareyEdge, avoid: &[&ExtRational]) -> Option<&'a ExtRational> {
    e.endpoints().into_iter().find(|x| !avoid.contains(x))
}

/// Walks the triangles from `from` to `to`, one per step. Returns an empty walk
/// for equal edges.
pub fn walk(from: &FareyEdge, to: &FareyEdge) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut rung = from.clone();
    while rung != *to {
        let (u, v) = (rung.u().clone(), rung.v().clone());
        let target = endpoint_outside(to, &[&u, &v]).expect("target edge differs from rung");
        let (m, d) = rung.triangle_apexes();
        let apex = if in_open_arc(&m, &u, &v) == in_open_arc(target, &u, &v) { m } else { d };

        let retained = if to.contains(&u) && to.contains(&apex) {
            u.clone()
        } else if to.contains(&v) && to.contains(&apex) {
            v.clone()
        } else {
            let t = endpoint_outside(to, &[&u, &v, &apex]).expect("target is not a triangle side");
            // the arc from u to apex that avoids v
            let u_side = if in_open_arc(&v, &u, &apex) {
                in_open_arc(t, &apex, &u)
            } else {
                in_open_arc(t, &u, &apex)
            };
            if u_side {
                u.clone()
            } else {
                v.clone()
            }
        };
        let step = Step { entry: rung, apex, retained };
        rung = step.exit();
        steps.push(step);
    }
    steps
}

fn ladder_from_steps(steps: &[Step], start: &FareyEdge, end: &FareyEdge) -> Ladder {
    let first = &steps[0];
    let mut pivots = vec![first.entry.other(&first.retained).expect("retained vertex on entry rung").clone()];
    let mut types: Vec<u64> = Vec::new();
    for step in steps {
        if pivots.len() > 1 && pivots.last() == Some(&step.retained) {
            *types.last_mut().expect("block open") += 1;
        } else {
            pivots.push(step.retained.clone());
            types.push(1);
        }
    }
    pivots.push(steps.last().expect("nonempty").apex.clone());
    Ladder { pivots, types, start_rung: start.clone(), end_rung: end.clone() }
}

/// The ladder of triangles between two rungs.
pub fn generate_ladder(e0: &FareyEdge, e1: &FareyEdge) -> Result<Ladder> {
    if e0 == e1 {
        return Err(Error::EqualEdges);
    }
    let steps = walk(e0, e1);
    if steps.len() == 1 {
        return Err(Error::AdjacentEdges);
    }
    Ok(ladder_from_steps(&steps, e0, e1))
}

impl Ladder {
    /// Number of type entries.
    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn triangle_count(&self) -> u64 {
        self.types.iter().sum()
    }

    /// The triangles of the ladder, in order from the start rung.
    pub fn steps(&self) -> Vec<Step> {
        walk(&self.start_rung, &self.end_rung)
    }

    /// Path through the pivots, endpoints included. For the (1,1) ladder the
    /// pivot order fixes which of the two possible spines is used.
    pub fn spine(&self) -> Vec<ExtRational> {
        self.pivots.clone()
    }

    /// Shifts an odd window of a periodic ladder so that its first and last
    /// blocks merge: `(a1, …, an)` becomes `(a2, …, a(n−1), an + a1)`.
    ///
    /// The start rung moves to the exit of the first block and the far end is
    /// extended by `a1` triangles around the last pivot. Even ladders and
    /// single-block ladders are returned unchanged.
    pub fn calibrate(&self) -> Ladder {
        if self.types.len().is_multiple_of(2) || self.types.len() < 2 {
            return self.clone();
        }
        let shift = self.types[0];
        let steps = self.steps();
        let last = steps.last().expect("nonempty ladder");
        let pivot = last.retained.clone();
        let mut behind = last.entry.other(&pivot).expect("last block pivot on entry rung").clone();
        let mut front = last.apex.clone();
        for _ in 0..shift {
            let rung = FareyEdge::new(pivot.clone(), front.clone()).expect("fan edge");
            let (m, d) = rung.triangle_apexes();
            let next = if m == behind { d } else { m };
            behind = std::mem::replace(&mut front, next);
        }
        let mut pivots = self.pivots[1..self.pivots.len() - 1].to_vec();
        pivots.push(front.clone());
        let mut types = self.types[1..].to_vec();
        *types.last_mut().expect("at least one block") += shift;
        let start_rung = FareyEdge::new(pivots[0].clone(), pivots[1].clone()).expect("consecutive pivots");
        let end_rung = FareyEdge::new(pivot, front).expect("fan edge");
        Ladder { pivots, types, start_rung, end_rung }
    }
}

/// Whether the invariant ladder of `m` contains the edge {0, ∞}, i.e. `b c > 0`.
pub fn is_standard(m: &MatrixPSL2Z) -> Result<bool> {
    m.ensure_hyperbolic()?;
    Ok((m.b() * m.c()) > 0.into())
}

/// A rung of the invariant ladder of `m`, ordered (inside, outside) when found
/// through the ancestor path of the midpoint of the fixed points.
pub fn find_rung(m: &MatrixPSL2Z) -> Result<FareyEdge> {
    if is_standard(m)? {
        return Ok(FareyEdge::standard());
    }
    let quad = m.fixed_point_quadratic()?;
    let mut cur = quad.midpoint();
    loop {
        let next = cur.ancestor()?;
        if quad.strictly_between_roots(&cur) && !quad.strictly_between_roots(&next) {
            return FareyEdge::new(cur, next);
        }
        cur = next;
    }
}

/// An even fundamental window of the invariant ladder of `m`: the ladder from
/// a rung to its image, calibrated when odd.
pub fn invariant_ladder_window(m: &MatrixPSL2Z) -> Result<Ladder> {
    Ok(raw_and_calibrated_window(m)?.1)
}

/// The uncalibrated window together with its calibrated form.
pub fn raw_and_calibrated_window(m: &MatrixPSL2Z) -> Result<(Ladder, Ladder)> {
    let e = find_rung(m)?;
    let image = FareyEdge::new(m.apply(e.u()), m.apply(e.v())).expect("action preserves edges");
    let raw = generate_ladder(&e, &image)?;
    if raw.types.len() < 2 {
        // a single fan from e to f(e) would make f fix its pivot, a rational point
        return Err(Error::Internal(format!("window of {m} has a single block")));
    }
    let calibrated = raw.calibrate();
    Ok((raw, calibrated))
}
