use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{Simplex, SimplicialComplex};

/// Iterated free-face collapse.
///
/// An edge lying in exactly one triangle is removed together with that
/// triangle; afterwards a vertex lying on exactly one edge is removed together
/// with that edge. Both moves are deformation retractions, so Betti numbers
/// are unchanged. Collapses are applied smallest-simplex first.
pub fn simplicial_collapse(k: &SimplicialComplex) -> SimplicialComplex {
    let mut out = k.clone();

    let mut tris_of_edge: BTreeMap<Simplex, Vec<Simplex>> = BTreeMap::new();
    for t in k.triangles() {
        for e in t.faces() {
            tris_of_edge.entry(e).or_default().push(*t);
        }
    }
    let mut live_count: BTreeMap<Simplex, usize> =
        k.edges().iter().map(|e| (*e, tris_of_edge.get(e).map_or(0, Vec::len))).collect();

    let mut free: BTreeSet<Simplex> =
        live_count.iter().filter(|(_, &c)| c == 1).map(|(e, _)| *e).collect();
    while let Some(e) = free.pop_first() {
        if live_count.get(&e) != Some(&1) {
            continue;
        }
        let t = *tris_of_edge[&e]
            .iter()
            .find(|t| out.contains(t))
            .expect("free edge has one live coface");
        out.remove_unchecked(&t);
        out.remove_unchecked(&e);
        live_count.remove(&e);
        for f in t.faces().filter(|f| *f != e) {
            let c = live_count.get_mut(&f).expect("face of live triangle");
            *c -= 1;
            if *c == 1 {
                free.insert(f);
            }
        }
    }

    let mut edges_of_vertex: BTreeMap<Simplex, BTreeSet<Simplex>> = BTreeMap::new();
    for e in out.edges() {
        for v in e.faces() {
            edges_of_vertex.entry(v).or_default().insert(*e);
        }
    }
    let mut leaves: BTreeSet<Simplex> =
        edges_of_vertex.iter().filter(|(_, es)| es.len() == 1).map(|(v, _)| *v).collect();
    while let Some(v) = leaves.pop_first() {
        let Some(es) = edges_of_vertex.get(&v) else { continue };
        if es.len() != 1 {
            continue;
        }
        let e = *es.first().expect("one edge");
        debug_assert_eq!(live_count.get(&e), Some(&0));
        out.remove_unchecked(&e);
        out.remove_unchecked(&v);
        edges_of_vertex.remove(&v);
        let other = e.faces().find(|w| *w != v).expect("edge has two endpoints");
        let rest = edges_of_vertex.get_mut(&other).expect("endpoint");
        rest.remove(&e);
        if rest.len() == 1 {
            leaves.insert(other);
        }
    }
    out
}
