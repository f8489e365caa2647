//! Minimum-link search over axis-adjacency graphs.
//!
//! Search states are `(node, heading)`. Continuing straight is free within a
//! link; starting or turning opens a new link. Witnesses are deterministic:
//! among all walks with the fewest links, the one with the fewest steps, and
//! among those the lexicographically smallest step sequence in E < N < W < S order.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::{Cell, GridSet};
use crate::{Direction, Error, OrthoPath};

/// A graph whose nodes are dense indices and whose edges are axis steps.
/// Adjacency must be symmetric: `neighbor(a, d) == Some(b)` iff
/// `neighbor(b, d.opposite()) == Some(a)`.
pub trait LinkGraph {
    fn node_count(&self) -> usize;
    fn neighbor(&self, node: usize, dir: Direction) -> Option<usize>;
}

/// A minimum-link walk: the visited nodes and the step taken out of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkWalk {
    pub links: usize,
    pub nodes: Vec<usize>,
    pub steps: Vec<Direction>,
}

/// Grid-level result of an s-distance query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkPath {
    pub links: usize,
    pub path: OrthoPath<i64>,
}

const NO_HEADING: usize = 4;
type Cost = (usize, usize);

fn turn_cost(heading: usize, dir: Direction) -> usize {
    usize::from(heading != dir.index())
}

pub fn min_link_path<G: LinkGraph + ?Sized>(graph: &G, from: usize, to: usize) -> Option<LinkWalk> {
    if from == to {
        return Some(LinkWalk { links: 0, nodes: vec![from], steps: vec![] });
    }
    let n = graph.node_count();
    // remaining[(node, heading)] = cheapest (links, steps) from that state to `to`
    let mut remaining: Vec<Option<Cost>> = vec![None; n * 5];
    let mut heap = BinaryHeap::new();
    for h in 0..5 {
        remaining[to * 5 + h] = Some((0, 0));
    }
    for d in Direction::ALL {
        heap.push(Reverse(((0usize, 0usize), to, d.index())));
    }
    while let Some(Reverse((cost, node, heading))) = heap.pop() {
        if remaining[node * 5 + heading] != Some(cost) || heading == NO_HEADING {
            continue;
        }
        let arrived = Direction::ALL[heading];
        let Some(pred) = graph.neighbor(node, arrived.opposite()) else {
            continue;
        };
        for h in 0..5 {
            let cand = (cost.0 + turn_cost(h, arrived), cost.1 + 1);
            let slot = &mut remaining[pred * 5 + h];
            if slot.is_none_or(|c| cand < c) {
                *slot = Some(cand);
                if h != NO_HEADING {
                    heap.push(Reverse((cand, pred, h)));
                }
            }
        }
    }
    let total = remaining[from * 5 + NO_HEADING]?;

    let mut walk = LinkWalk { links: total.0, nodes: vec![from], steps: vec![] };
    let (mut node, mut heading, mut left) = (from, NO_HEADING, total);
    while node != to {
        let (dir, next, rest) = Direction::ALL
            .iter()
            .find_map(|&d| {
                let next = graph.neighbor(node, d)?;
                let rest = remaining[next * 5 + d.index()]?;
                let via = (rest.0 + turn_cost(heading, d), rest.1 + 1);
                (via == left).then_some((d, next, rest))
            })
            .expect("optimal continuation exists");
        walk.steps.push(dir);
        walk.nodes.push(next);
        node = next;
        heading = dir.index();
        left = rest;
    }
    Some(walk)
}

/// Fewest links from `from` to every node; `None` for unreachable nodes.
pub fn link_distances_from<G: LinkGraph + ?Sized>(graph: &G, from: usize) -> Vec<Option<usize>> {
    let n = graph.node_count();
    let mut dist: Vec<Option<usize>> = vec![None; n * 5];
    let mut queue = VecDeque::new();
    dist[from * 5 + NO_HEADING] = Some(0);
    queue.push_back((from, NO_HEADING));
    while let Some((node, heading)) = queue.pop_front() {
        let here = dist[node * 5 + heading].expect("queued states are labelled");
        for d in Direction::ALL {
            let Some(next) = graph.neighbor(node, d) else { continue };
            let w = turn_cost(heading, d);
            let cand = here + w;
            let slot = &mut dist[next * 5 + d.index()];
            if slot.is_none_or(|c| cand < c) {
                *slot = Some(cand);
                if w == 0 {
                    queue.push_front((next, d.index()));
                } else {
                    queue.push_back((next, d.index()));
                }
            }
        }
    }
    (0..n).map(|v| (0..5).filter_map(|h| dist[v * 5 + h]).min()).collect()
}

fn walk_to_path(grid: &GridSet, walk: &LinkWalk) -> OrthoPath<i64> {
    let points = walk.nodes.iter().map(|&i| grid.cell_at(i).as_point()).collect();
    OrthoPath::new(points).expect("grid steps are axis-parallel")
}

impl GridSet {
    /// Minimum number of links of an orthogonal cell path from `a` to `b`,
    /// with a witness; `Ok(None)` when `b` is unreachable from `a`.
    pub fn s_distance(&self, a: Cell, b: Cell) -> Result<Option<LinkPath>, Error> {
        self.require(a)?;
        self.require(b)?;
        Ok(min_link_path(self, self.index_of(a), self.index_of(b)).map(|walk| LinkPath {
            links: walk.links,
            path: walk_to_path(self, &walk),
        }))
    }

    /// Largest s-distance over all ordered pairs of cells.
    pub fn s_diameter(&self) -> Result<usize, Error> {
        if !self.is_orthogonally_connected() {
            return Err(Error::GridDisconnected);
        }
        let cells: Vec<usize> = self.cells().map(|c| self.index_of(c)).collect();
        let mut best = 0;
        for &src in &cells {
            let dist = link_distances_from(self, src);
            for &dst in &cells {
                best = best.max(dist[dst].expect("connected grid"));
            }
        }
        Ok(best)
    }
}
