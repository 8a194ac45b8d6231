use std::collections::BTreeSet;

use nalgebra::{Matrix3, Vector3};
use rand::Rng;

use super::{place_apexes, MAX_ATTEMPTS};
use crate::embedding::Embedding;
use crate::error::{internal, precondition, Error, Result};
use crate::geom::Frame;
use crate::graph::{decompose_degree2, Component, Graph};
use crate::partition::{
    refined_partition, select_w_conflict_free, select_w_even, split_path_cycle, ConflictKind, ConflictSet,
};
use crate::sphere::{coordinate_plane, embed_gp_s2_into, place_on_circle, place_quarter_turns, GpCertificate, GpScope};
use crate::verify::{certify, Tolerances};

/// Embeds a graph of maximum degree at most `d` (even, `d ≥ 4`) in `R^d`.
///
/// A refined partition puts parts of maximum degree 1 on `d/2` orthogonal
/// circles; the degree-2 vertices removed from the last part have exactly
/// two neighbours per circle and go to an apex of their `d` neighbours.
pub fn embed_even<R: Rng + ?Sized>(g: &Graph, d: usize, rng: &mut R) -> Result<Embedding> {
    if d < 4 || d % 2 == 1 {
        return Err(precondition("embed_even needs an even d ≥ 4"));
    }
    if g.max_degree() > d {
        return Err(precondition(format!("max degree {} exceeds {d}", g.max_degree())));
    }
    let p = refined_partition(g, d)?;
    let last = p.parts.len() - 1;
    let w = select_w_even(g, &p.parts[last])?;
    let ws: BTreeSet<usize> = w.iter().copied().collect();
    let mut circles = p.parts.clone();
    circles[last].retain(|v| !ws.contains(v));
    for attempt in 0..MAX_ATTEMPTS {
        let mut e = Embedding::new(g.n(), d);
        for (i, part) in circles.iter().enumerate() {
            place_on_circle(g, part, &coordinate_plane(d, i), &mut e, rng)?;
        }
        if !place_apexes(g, &w, d, &mut e)? {
            continue;
        }
        certify(g, &e, false)?;
        e.meta.retries = attempt;
        e.note(format!("{} circles, {} apex vertices", circles.len(), w.len()));
        return Ok(e);
    }
    Err(Error::ResampleExceeded {
        what: "circle angles for apex placement",
        attempts: MAX_ATTEMPTS,
    })
}

/// Embeds a graph of maximum degree at most `d` (odd, `d ≥ 5`) in `R^d`.
///
/// The ordinary parts of a refined partition go on orthogonal circles, the
/// last part on a 2-sphere `S` in general position, and the other special
/// part on a further circle `C` except for an independent set `W` placed at
/// apexes. `W` takes at most two vertices whose neighbourhoods on `S` span
/// the same great circle.
pub fn embed_odd<R: Rng + ?Sized>(g: &Graph, d: usize, rng: &mut R) -> Result<Embedding> {
    if d < 5 || d.is_multiple_of(2) {
        return Err(precondition("embed_odd needs an odd d ≥ 5"));
    }
    if g.max_degree() > d {
        return Err(precondition(format!("max degree {} exceeds {d}", g.max_degree())));
    }
    let p = refined_partition(g, d)?;
    let (s1, s2) = (p.parts.len() - 2, p.parts.len() - 1);
    let frame = Frame::standard(d);
    let sphere = frame.slice(d - 5..d - 2);
    let circle_c = frame.slice(d - 2..d);

    let sub = &p.parts[s1];
    let local = decompose_degree2(&g.induced(sub))?;
    let mut pairs = Vec::new();
    for comp in &local {
        let seq: Vec<usize> = comp.vertices().iter().map(|&i| sub[i]).collect();
        let long = match comp {
            Component::Path(_) => seq.len() > 4,
            Component::Cycle(_) => seq.len() != 4,
        };
        if long {
            let global = match comp {
                Component::Path(_) => Component::Path(seq),
                Component::Cycle(_) => Component::Cycle(seq),
            };
            pairs.extend(split_path_cycle(&global)?.b_edges);
        }
    }
    let candidates: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let on_sphere: BTreeSet<usize> = p.parts[s2].iter().copied().collect();

    for attempt in 0..MAX_ATTEMPTS {
        let mut e = Embedding::new(g.n(), d);
        for (i, part) in p.parts[..s1].iter().enumerate() {
            place_on_circle(g, part, &coordinate_plane(d, i), &mut e, rng)?;
        }
        let cert = embed_gp_s2_into(g, &p.parts[s2], &sphere, GpScope::UnitDistance, &mut e, rng)?;
        let Some(conflicts) = conflict_sets(g, &candidates, &on_sphere, &sphere, &cert, &e)? else {
            continue;
        };
        let w = select_w_conflict_free(&pairs, &conflicts)?;
        let ws: BTreeSet<usize> = w.iter().copied().collect();
        let rest: Vec<usize> = sub.iter().copied().filter(|v| !ws.contains(v)).collect();
        let mut seqs = Vec::new();
        for comp in decompose_degree2(&g.induced(&rest))? {
            if matches!(&comp, Component::Cycle(c) if c.len() != 4) {
                return Err(internal("a cycle other than C_4 remained for the circle"));
            }
            seqs.push(comp.vertices().iter().map(|&i| rest[i]).collect::<Vec<_>>());
        }
        place_quarter_turns(&seqs, &circle_c, &mut e, rng)?;
        if !place_apexes(g, &w, d, &mut e)? {
            continue;
        }
        certify(g, &e, false)?;
        e.meta.retries = attempt;
        e.note(format!(
            "{} circles, sphere of {} vertices, {} apex vertices, {} conflicting sets",
            s1 + 1,
            on_sphere.len(),
            w.len(),
            conflicts.len()
        ));
        return Ok(e);
    }
    Err(Error::ResampleExceeded {
        what: "sphere and circle placement for apexes",
        attempts: MAX_ATTEMPTS,
    })
}

/// Groups the candidates whose three sphere neighbours span a great circle
/// of `S` by that circle. `None` when some neighbour triple is nearly but not
/// exactly on a great circle, or a group is too large; the caller resamples.
fn conflict_sets(
    g: &Graph,
    candidates: &[usize],
    on_sphere: &BTreeSet<usize>,
    sphere: &Frame,
    cert: &GpCertificate,
    e: &Embedding,
) -> Result<Option<Vec<ConflictSet>>> {
    let eps = Tolerances::default().eps_gp;
    let mut groups: Vec<(Vector3<f64>, Vec<usize>, BTreeSet<usize>)> = Vec::new();
    for &w in candidates {
        let n1: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|u| on_sphere.contains(u))
            .collect();
        if n1.len() != 3 {
            return Err(internal(format!(
                "vertex {w} has {} neighbours on the sphere, expected 3",
                n1.len()
            )));
        }
        let coords: Vec<Vector3<f64>> = n1
            .iter()
            .map(|&u| Vector3::from_column_slice(&sphere.coords(e.point(u))))
            .collect();
        let antipodal = cert
            .antipodal_pairs
            .iter()
            .find(|&&(a, b)| n1.contains(&a) && n1.contains(&b));
        let normal = match antipodal {
            Some(&(a, b)) => {
                let ia = n1.iter().position(|&x| x == a).unwrap();
                let ic = (0..3).find(|&i| n1[i] != a && n1[i] != b).unwrap();
                coords[ia].cross(&coords[ic])
            }
            None => {
                let vol = Matrix3::from_columns(&[coords[0], coords[1], coords[2]])
                    .determinant()
                    .abs();
                if vol < eps {
                    return Ok(None);
                }
                continue;
            }
        };
        let mut normal = normal.normalize();
        if normal.iter().find(|x| x.abs() > 1e-9).is_some_and(|&x| x < 0.0) {
            normal = -normal;
        }
        match groups.iter_mut().find(|(n, _, _)| (n - normal).norm() < 1e-9) {
            Some((_, members, anchor)) => {
                members.push(w);
                anchor.extend(n1);
            }
            None => groups.push((normal, vec![w], n1.into_iter().collect())),
        }
    }
    let mut sets = Vec::new();
    for (_, members, anchor) in groups {
        let kind = match members.len() {
            0..=2 => continue,
            3 => ConflictKind::Triple,
            4 => ConflictKind::FourTuple,
            _ => return Ok(None),
        };
        sets.push(ConflictSet {
            members,
            kind,
            anchor: anchor.into_iter().collect(),
        });
    }
    Ok(Some(sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_edges;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ok(g: &Graph, e: &Embedding) -> bool {
        verify_edges(g, e, &Tolerances::default()).unwrap().pass
    }

    #[test]
    fn even_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = Graph::circulant(8, &[1, 2]);
        assert!(ok(&g, &embed_even(&g, 4, &mut rng).unwrap()));
        let g = Graph::complete(5).disjoint_union(&Graph::complete(5));
        assert!(ok(&g, &embed_even(&g, 4, &mut rng).unwrap()));
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(ok(&g, &embed_even(&g, 4, &mut rng).unwrap()));
    }

    #[test]
    fn odd_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = Graph::circulant(12, &[1, 2, 6]);
        let e = embed_odd(&g, 5, &mut rng).unwrap();
        assert!(ok(&g, &e));
        assert_eq!(g.edge_count(), 30);
        let g = Graph::petersen();
        assert!(ok(&g, &embed_odd(&g, 5, &mut rng).unwrap()));
        let g = Graph::complete(6);
        assert!(ok(&g, &embed_odd(&g, 5, &mut rng).unwrap()));
    }
}
