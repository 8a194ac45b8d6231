//! Vertex partitions with per-part degree caps, and the independent-set
//! selections the Euclidean embedders build on top of them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{internal, precondition, Result};
use crate::graph::{Component, Graph};

/// Ordered disjoint parts covering the vertex set, each with a target cap
/// on the maximum degree of the subgraph it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub parts: Vec<Vec<usize>>,
    pub caps: Vec<usize>,
}

impl Partition {
    fn from_assignment(assign: &[usize], caps: Vec<usize>) -> Partition {
        let mut parts = vec![Vec::new(); caps.len()];
        for (v, &p) in assign.iter().enumerate() {
            parts[p].push(v);
        }
        Partition { parts, caps }
    }

    /// Part index of every vertex.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut a = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                a[v] = i;
            }
        }
        a
    }

    pub fn part_set(&self, i: usize) -> BTreeSet<usize> {
        self.parts[i].iter().copied().collect()
    }

    /// Parts are disjoint, cover `0..n`, and every `G[V_i]` respects its cap.
    pub fn satisfies_caps(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for part in &self.parts {
            for &v in part {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        self.parts.iter().zip(&self.caps).all(|(part, &cap)| {
            let set: BTreeSet<usize> = part.iter().copied().collect();
            part.iter().all(|&v| g.degree_into(v, &set) <= cap)
        })
    }
}

/// How local search seeds its starting partition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InitialPartition {
    /// Vertex `v` starts in part `v mod α`.
    #[default]
    RoundRobin,
    /// Uniformly shuffled balanced partition.
    Seeded(u64),
}

impl InitialPartition {
    fn assign(self, n: usize, parts: usize) -> Vec<usize> {
        let mut a: Vec<usize> = (0..n).map(|v| v % parts).collect();
        if let InitialPartition::Seeded(seed) = self {
            a.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        a
    }
}

/// Assignment plus `count[v][j]` = neighbours of `v` in part `j`.
struct Counts<'g> {
    g: &'g Graph,
    assign: Vec<usize>,
    count: Vec<Vec<usize>>,
}

impl<'g> Counts<'g> {
    fn new(g: &'g Graph, assign: Vec<usize>, parts: usize) -> Self {
        let mut count = vec![vec![0; parts]; g.n()];
        for (v, row) in count.iter_mut().enumerate() {
            for &u in g.neighbors(v) {
                row[assign[u]] += 1;
            }
        }
        Counts { g, assign, count }
    }

    fn own(&self, v: usize) -> usize {
        self.count[v][self.assign[v]]
    }

    fn relocate(&mut self, v: usize, to: usize) {
        let from = self.assign[v];
        for &u in self.g.neighbors(v) {
            self.count[u][from] -= 1;
            self.count[u][to] += 1;
        }
        self.assign[v] = to;
    }

    /// `Σ_i e(G[V_i])`.
    fn internal_edges(&self) -> usize {
        (0..self.g.n()).map(|v| self.own(v)).sum::<usize>() / 2
    }
}

/// Statistics of a [`lovasz_partition_with`] run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LovaszStats {
    pub moves: usize,
    pub initial_potential: i64,
    pub final_potential: i64,
}

/// Partition into `caps.len()` parts with `Δ(G[V_i]) ≤ caps[i]`, for caps
/// with `Σ caps ≥ Δ(G) - |caps| + 1`.
pub fn lovasz_partition(g: &Graph, caps: &[usize]) -> Result<Partition> {
    lovasz_partition_with(g, caps, InitialPartition::RoundRobin).map(|(p, _)| p)
}

/// [`lovasz_partition`] with an explicit starting partition.
///
/// Repeatedly moves the smallest vertex whose degree inside its part
/// exceeds the cap into a part where its degree is within the cap (fewest
/// neighbours there, then smallest index). The potential
/// `Σ_i (e(G[V_i]) - k_i |V_i|)` drops by at least 1 per move; this is
/// checked at every move.
pub fn lovasz_partition_with(g: &Graph, caps: &[usize], init: InitialPartition) -> Result<(Partition, LovaszStats)> {
    let alpha = caps.len();
    if alpha == 0 {
        return Err(precondition("at least one part is required"));
    }
    let delta = g.max_degree();
    let budget = caps.iter().sum::<usize>() + alpha;
    if budget < delta + 1 {
        return Err(precondition(format!(
            "caps sum to {} but max degree {delta} needs at least {}",
            budget - alpha,
            (delta + 1).saturating_sub(alpha)
        )));
    }
    let mut st = Counts::new(g, init.assign(g.n(), alpha), alpha);
    let potential = |st: &Counts| -> i64 {
        let sizes = (0..g.n()).fold(vec![0i64; alpha], |mut acc, v| {
            acc[st.assign[v]] += 1;
            acc
        });
        st.internal_edges() as i64 - caps.iter().zip(&sizes).map(|(&k, &s)| k as i64 * s).sum::<i64>()
    };
    let initial_potential = potential(&st);
    let mut phi = initial_potential;
    let mut moves = 0;
    while let Some(v) = (0..g.n()).find(|&v| st.own(v) > caps[st.assign[v]]) {
        let dest = (0..alpha)
            .filter(|&j| j != st.assign[v] && st.count[v][j] <= caps[j])
            .min_by_key(|&j| (st.count[v][j], j))
            .ok_or_else(|| internal(format!("vertex {v} has no part with spare capacity")))?;
        st.relocate(v, dest);
        moves += 1;
        let next = potential(&st);
        if next >= phi {
            return Err(internal(format!("potential did not decrease ({phi} -> {next})")));
        }
        phi = next;
    }
    let part = Partition::from_assignment(&st.assign, caps.to_vec());
    Ok((
        part,
        LovaszStats {
            moves,
            initial_potential,
            final_potential: phi,
        },
    ))
}

/// Maximum number of search/migrate rounds in [`refined_partition`].
pub const REFINE_ROUNDS: usize = 100;

/// Caps of the refined partition for maximum degree `d`: all parts 1 except
/// the last (even `d`) or the last two (odd `d`), which get 2.
pub fn refined_caps(d: usize) -> Vec<usize> {
    if d.is_multiple_of(2) {
        let mut c = vec![1; d / 2];
        c[d / 2 - 1] = 2;
        c
    } else {
        let a = (d - 1) / 2;
        let mut c = vec![1; a];
        c[a - 2] = 2;
        c[a - 1] = 2;
        c
    }
}

/// Partition of a graph of maximum degree at most `d ≥ 4` into `⌊d/2⌋`
/// parts with exact neighbour counts for the degree-2 vertices of the
/// special parts. See [`check_refined`] for the clauses.
pub fn refined_partition(g: &Graph, d: usize) -> Result<Partition> {
    refined_partition_with(g, d, InitialPartition::RoundRobin)
}

pub fn refined_partition_with(g: &Graph, d: usize, init: InitialPartition) -> Result<Partition> {
    if d < 4 {
        return Err(precondition("refined partition needs d ≥ 4"));
    }
    if g.max_degree() > d {
        return Err(precondition(format!("max degree {} exceeds {d}", g.max_degree())));
    }
    let caps = refined_caps(d);
    let alpha = caps.len();
    let mut st = Counts::new(g, init.assign(g.n(), alpha), alpha);
    for _ in 0..REFINE_ROUNDS {
        let improved = local_search(&mut st, alpha);
        let migrated = if d.is_multiple_of(2) {
            migrate_even(&mut st, alpha)
        } else {
            migrate_odd(&mut st, alpha)
        };
        let part = Partition::from_assignment(&st.assign, caps.clone());
        match check_refined(g, d, &part) {
            Ok(()) => return Ok(part),
            Err(msg) if !improved && !migrated => {
                return Err(internal(format!("refined partition stuck at a local minimum: {msg}")));
            }
            Err(_) => {}
        }
    }
    Err(internal(format!(
        "refined partition did not settle in {REFINE_ROUNDS} rounds"
    )))
}

/// Moves vertices to parts with strictly fewer neighbours until none can.
fn local_search(st: &mut Counts, alpha: usize) -> bool {
    let mut any = false;
    loop {
        let mut moved = false;
        for v in 0..st.g.n() {
            let best = (0..alpha).min_by_key(|&j| (st.count[v][j], j)).unwrap();
            if st.count[v][best] < st.own(v) {
                st.relocate(v, best);
                moved = true;
            }
        }
        if !moved {
            return any;
        }
        any = true;
    }
}

fn migrate_even(st: &mut Counts, alpha: usize) -> bool {
    let last = alpha - 1;
    let mut any = false;
    while let Some(v) = (0..st.g.n()).find(|&v| st.assign[v] != last && st.own(v) == 2 && st.count[v][last] == 2) {
        st.relocate(v, last);
        any = true;
    }
    any
}

fn migrate_odd(st: &mut Counts, alpha: usize) -> bool {
    let (s1, s2) = (alpha - 2, alpha - 1);
    let mut any = false;
    loop {
        let phase1 = (0..st.g.n()).find_map(|v| {
            if st.assign[v] >= s1 || st.own(v) != 2 {
                return None;
            }
            [s1, s2].into_iter().find(|&j| st.count[v][j] == 2).map(|j| (v, j))
        });
        if let Some((v, j)) = phase1 {
            st.relocate(v, j);
            any = true;
            continue;
        }
        let phase2 = (0..st.g.n()).find(|&v| st.assign[v] == s1 && st.own(v) == 2 && st.count[v][s2] == 2);
        if let Some(v) = phase2 {
            st.relocate(v, s2);
            any = true;
            continue;
        }
        return any;
    }
}

/// Checks the refined-partition clauses vertex by vertex.
///
/// Even `d`, parts `V_1..V_{d/2}`: `Δ(G[V_i]) ≤ 1` for `i < d/2`,
/// `Δ(G[V_{d/2}]) ≤ 2`, and a degree-2 vertex of `G[V_{d/2}]` has exactly 2
/// neighbours in every part.
///
/// Odd `d`, parts `V_1..V_{(d-1)/2}`, the last two special: the others have
/// `Δ ≤ 1`, the special ones `Δ ≤ 2`; a degree-2 vertex of the first special
/// part has exactly 2 neighbours in each ordinary part and exactly 3 in the
/// second special part; a degree-2 vertex of the second special part has at
/// least 2 neighbours in every other part and at most 3 in the first special
/// part.
pub fn check_refined(g: &Graph, d: usize, p: &Partition) -> std::result::Result<(), String> {
    let alpha = p.parts.len();
    let assign = p.assignment(g.n());
    let count = |v: usize, j: usize| g.neighbors(v).iter().filter(|&&u| assign[u] == j).count();
    for (v, &i) in assign.iter().enumerate() {
        let own = count(v, i);
        if own > p.caps[i] {
            return Err(format!(
                "vertex {v} has {own} neighbours in its part {i} (cap {})",
                p.caps[i]
            ));
        }
        if own != 2 {
            continue;
        }
        if d.is_multiple_of(2) {
            if let Some(j) = (0..alpha).find(|&j| count(v, j) != 2) {
                return Err(format!(
                    "vertex {v} of the last part has {} neighbours in part {j}",
                    count(v, j)
                ));
            }
        } else {
            let (s1, s2) = (alpha - 2, alpha - 1);
            if i == s1 {
                if let Some(j) = (0..s1).find(|&j| count(v, j) != 2) {
                    return Err(format!(
                        "vertex {v} of part {s1} has {} neighbours in part {j}",
                        count(v, j)
                    ));
                }
                if count(v, s2) != 3 {
                    return Err(format!(
                        "vertex {v} of part {s1} has {} neighbours in part {s2}",
                        count(v, s2)
                    ));
                }
            } else {
                if let Some(j) = (0..s2).find(|&j| count(v, j) < 2) {
                    return Err(format!(
                        "vertex {v} of part {s2} has {} neighbours in part {j}",
                        count(v, j)
                    ));
                }
                if count(v, s1) > 3 {
                    return Err(format!(
                        "vertex {v} of part {s2} has {} neighbours in part {s1}",
                        count(v, s1)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Split of a long path or a cycle of length other than 4 into `A` and a
/// set of disjoint edges `B`, such that removing one end of every `B` edge
/// leaves components of at most 4 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABSplit {
    pub a: Vec<usize>,
    pub b_edges: Vec<(usize, usize)>,
}

impl ABSplit {
    pub fn b(&self) -> Vec<usize> {
        let mut b: Vec<usize> = self.b_edges.iter().flat_map(|&(x, y)| [x, y]).collect();
        b.sort_unstable();
        b
    }
}

/// Greedy choice of the `B` edges along the component.
///
/// Paths start with the edge next to the first endpoint and leave two
/// `A` vertices between consecutive edges (one when that is what keeps the
/// tail short). Cycles use `⌈n/4⌉` edges with gaps of one or two.
pub fn split_path_cycle(h: &Component) -> Result<ABSplit> {
    let seq = h.vertices();
    let n = seq.len();
    let mut starts = Vec::new();
    match h {
        Component::Path(_) => {
            if n < 5 {
                return Err(precondition(format!("path with {n} vertices is too short to split")));
            }
            let last = n - 1;
            let mut end = 2;
            starts.push(1);
            loop {
                let rest = last - end;
                if rest <= 3 {
                    break;
                }
                let s = if rest >= 5 { end + 3 } else { end + 2 };
                starts.push(s);
                end = s + 1;
            }
        }
        Component::Cycle(_) => {
            if n == 4 || n < 3 {
                return Err(precondition(format!("cycle of length {n} cannot be split")));
            }
            let b = if n <= 5 { 1 } else { n.div_ceil(4) };
            let total_gap = n - 2 * b;
            let gaps: Vec<usize> = if b == 1 {
                vec![total_gap]
            } else {
                let twos = total_gap - b;
                (0..b).map(|i| if i < twos { 2 } else { 1 }).collect()
            };
            let mut pos = 0;
            for gap in gaps {
                starts.push(pos);
                pos += 2 + gap;
            }
        }
    }
    let b_edges: Vec<(usize, usize)> = starts.iter().map(|&s| (seq[s], seq[s + 1])).collect();
    let in_b: BTreeSet<usize> = b_edges.iter().flat_map(|&(x, y)| [x, y]).collect();
    let a = seq.iter().copied().filter(|v| !in_b.contains(v)).collect();
    Ok(ABSplit { a, b_edges })
}

/// Independent set `W` of `G[last]` after removing degree-2 vertices one at
/// a time (smallest first) until `G[last \ W]` has maximum degree 1.
pub fn select_w_even(g: &Graph, last: &[usize]) -> Result<Vec<usize>> {
    let part: BTreeSet<usize> = last.iter().copied().collect();
    if part.iter().any(|&v| g.degree_into(v, &part) > 2) {
        return Err(precondition("part induces a vertex of degree > 2"));
    }
    let mut rest = part.clone();
    let mut w = Vec::new();
    while let Some(v) = rest.iter().copied().find(|&v| g.degree_into(v, &rest) == 2) {
        rest.remove(&v);
        w.push(v);
    }
    for (i, &a) in w.iter().enumerate() {
        if g.degree_into(a, &part) != 2 {
            return Err(internal(format!(
                "selected vertex {a} does not have 2 neighbours in the part"
            )));
        }
        if w[i + 1..].iter().any(|&b| g.has_edge(a, b)) {
            return Err(internal("selected set is not independent"));
        }
    }
    if rest.iter().any(|&v| g.degree_into(v, &rest) > 1) {
        return Err(internal("remainder still has a vertex of degree 2"));
    }
    Ok(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConflictKind {
    Triple,
    FourTuple,
}

/// Vertices whose neighbourhoods on the 2-sphere span the same great
/// circle, so that they compete for the same pair of poles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictSet {
    pub members: Vec<usize>,
    pub kind: ConflictKind,
    /// The sphere vertices spanning the shared great circle.
    pub anchor: Vec<usize>,
}

/// One endpoint of every pair in `pairs`, such that no conflict set
/// contributes more than two vertices.
///
/// Conflict sets add one edge (triples) or two disjoint edges (4-tuples)
/// between members that are not already paired. Together with the pairs
/// this is a union of two matchings, hence bipartite; each component is
/// 2-coloured from its smallest vertex and the colour-0 side is returned.
pub fn select_w_conflict_free(pairs: &[(usize, usize)], conflicts: &[ConflictSet]) -> Result<Vec<usize>> {
    let mut mate: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in pairs {
        if a == b || mate.insert(a, b).is_some() || mate.insert(b, a).is_some() {
            return Err(precondition("pairs do not form a matching"));
        }
    }
    let mut extra: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for c in conflicts {
        if c.members.iter().any(|v| !seen.insert(*v)) {
            return Err(precondition("conflict sets overlap"));
        }
        let mut m: Vec<usize> = c.members.iter().copied().filter(|v| mate.contains_key(v)).collect();
        m.sort_unstable();
        let links: Vec<(usize, usize)> = match m.len() {
            0..=2 => Vec::new(),
            3 => {
                let pick = [(m[0], m[1]), (m[0], m[2]), (m[1], m[2])]
                    .into_iter()
                    .find(|&(x, y)| mate[&x] != y)
                    .ok_or_else(|| internal("triple without an unpaired couple"))?;
                vec![pick]
            }
            4 => {
                let options = [
                    [(m[0], m[1]), (m[2], m[3])],
                    [(m[0], m[2]), (m[1], m[3])],
                    [(m[0], m[3]), (m[1], m[2])],
                ];
                options
                    .into_iter()
                    .find(|opt| opt.iter().all(|&(x, y)| mate[&x] != y))
                    .ok_or_else(|| internal("4-tuple without two free couples"))?
                    .to_vec()
            }
            _ => return Err(precondition("conflict set with more than 4 members")),
        };
        for (x, y) in links {
            extra.insert(x, y);
            extra.insert(y, x);
        }
    }
    let mut color: BTreeMap<usize, u8> = BTreeMap::new();
    for &start in mate.keys() {
        if color.contains_key(&start) {
            continue;
        }
        color.insert(start, 0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[&v];
            for u in [mate.get(&v), extra.get(&v)].into_iter().flatten().copied() {
                match color.get(&u) {
                    Some(&cu) if cu == c => return Err(internal("augmented matching graph is not bipartite")),
                    Some(_) => {}
                    None => {
                        color.insert(u, 1 - c);
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    Ok(color.into_iter().filter(|&(_, c)| c == 0).map(|(v, _)| v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lovasz_c5() {
        let g = Graph::cycle(5);
        let p = lovasz_partition(&g, &[0, 1]).unwrap();
        assert!(p.satisfies_caps(&g));
    }

    #[test]
    fn lovasz_k4() {
        let g = Graph::complete(4);
        let p = lovasz_partition(&g, &[1, 1]).unwrap();
        assert!(p.satisfies_caps(&g));
        assert_eq!(p.parts[0].len(), 2);
        assert_eq!(p.parts[1].len(), 2);
    }

    #[test]
    fn lovasz_edgeless_and_bad_caps() {
        let g = Graph::new(4);
        let p = lovasz_partition(&g, &[0]).unwrap();
        assert_eq!(p.parts, vec![vec![0, 1, 2, 3]]);
        assert!(lovasz_partition(&Graph::complete(5), &[0, 1]).is_err());
        assert!(lovasz_partition(&g, &[]).is_err());
    }

    #[test]
    fn refined_matching_d4() {
        let mut g = Graph::new(8);
        for i in 0..4 {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        let p = refined_partition(&g, 4).unwrap();
        assert_eq!(p.parts.len(), 2);
        let last = p.part_set(1);
        assert!(p.parts[1].iter().all(|&v| g.degree_into(v, &last) <= 1));
    }

    #[test]
    fn refined_circulants() {
        let g = Graph::circulant(8, &[1, 2]);
        let p = refined_partition(&g, 4).unwrap();
        assert!(check_refined(&g, 4, &p).is_ok());
        let g = Graph::circulant(12, &[1, 2, 6]);
        let p = refined_partition(&g, 5).unwrap();
        assert_eq!(p.parts.len(), 2);
        assert!(check_refined(&g, 5, &p).is_ok());
    }

    #[test]
    fn split_examples() {
        let s = split_path_cycle(&Component::Path(vec![0, 1, 2, 3, 4])).unwrap();
        assert_eq!(s.b_edges, vec![(1, 2)]);
        let s = split_path_cycle(&Component::Cycle(vec![0, 1, 2, 3, 4, 5])).unwrap();
        assert_eq!(s.b_edges, vec![(0, 1), (3, 4)]);
        let s = split_path_cycle(&Component::Cycle(vec![0, 1, 2])).unwrap();
        assert_eq!(s.b_edges.len(), 1);
        assert_eq!(s.a.len(), 1);
        assert!(split_path_cycle(&Component::Cycle(vec![0, 1, 2, 3])).is_err());
        assert!(split_path_cycle(&Component::Path(vec![0, 1, 2, 3])).is_err());
    }

    #[test]
    fn select_even_examples() {
        let mut g = Graph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert!(select_w_even(&g, &[0, 1, 2, 3]).unwrap().is_empty());
        assert_eq!(select_w_even(&Graph::cycle(3), &[0, 1, 2]).unwrap(), vec![0]);
        assert_eq!(select_w_even(&Graph::cycle(4), &[0, 1, 2, 3]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn conflict_free_without_conflicts() {
        let w = select_w_conflict_free(&[(4, 1), (2, 3), (5, 0)], &[]).unwrap();
        assert_eq!(w, vec![0, 1, 2]);
    }

    #[test]
    fn conflict_free_rejects_overlaps() {
        let c = |m: Vec<usize>| ConflictSet {
            members: m,
            kind: ConflictKind::Triple,
            anchor: vec![],
        };
        assert!(select_w_conflict_free(&[(0, 1), (0, 2)], &[]).is_err());
        assert!(select_w_conflict_free(&[(0, 1), (2, 3), (4, 5)], &[c(vec![0, 2, 4]), c(vec![4, 1, 3])]).is_err());
    }
}
