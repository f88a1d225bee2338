use serde::Serialize;

use super::{internal, require_connected, ConstructionError};
use crate::coloring::{chromatic_number, KColoring};
use crate::graph::{find_cycle_of_length, Orientation, PathWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem4Case {
    /// The base graph has a triangle.
    Triangle,
    /// Triangle-free, middle layer independent: sources 1, middle 2, sinks 3.
    Layered,
    /// Triangle-free, middle layer not independent.
    Recolored,
}

/// Sources (in-degree 0), sinks (out-degree 0) and the remaining middle
/// vertices of an orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem4Decomposition {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub middle: Vec<usize>,
    pub case: Theorem4Case,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem4Output {
    pub coloring: KColoring,
    pub witness: PathWitness,
    pub decomposition: Theorem4Decomposition,
    /// The vertex recolored in the last sub-case, if any.
    pub recolored_vertex: Option<usize>,
}

/// A 3-coloring of a connected 3-chromatic graph together with a directed
/// path `x -> y -> z` of the orientation carrying all three colors.
pub fn theorem4(d: &Orientation) -> Result<Theorem4Output, ConstructionError> {
    let g = d.base();
    require_connected(g)?;
    let (k, start) = chromatic_number(g);
    if k != 3 {
        return Err(ConstructionError::Hypothesis(format!("chromatic number is {k}, not 3")));
    }

    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    let mut middle = Vec::new();
    for v in g.vertices() {
        match (d.in_degree(v), d.out_degree(v)) {
            (0, _) => sources.push(v),
            (_, 0) => sinks.push(v),
            _ => middle.push(v),
        }
    }
    let decomposition =
        |case| Theorem4Decomposition { sources: sources.clone(), sinks: sinks.clone(), middle: middle.clone(), case };

    let (coloring, witness, case, recolored_vertex) =
        if let Some(triangle) = find_cycle_of_length(g, 3).expect("3 is a valid length") {
            let t = &triangle.vertices;
            // some triangle vertex has an in-arc and an out-arc inside the triangle
            let path = t
                .iter()
                .find_map(|&y| {
                    let x = t.iter().copied().find(|&x| d.has_arc(x, y))?;
                    let z = t.iter().copied().find(|&z| d.has_arc(y, z))?;
                    Some(vec![x, y, z])
                })
                .ok_or_else(|| internal("oriented triangle without a directed path"))?;
            (start, path, Theorem4Case::Triangle, None)
        } else if g.is_independent(&middle) {
            let mut colors = vec![2; g.vertex_count()];
            for &v in &sources {
                colors[v] = 1;
            }
            for &v in &sinks {
                colors[v] = 3;
            }
            let f = KColoring::new(3, colors).expect("colors in 1..=3");
            let u = *middle.first().ok_or_else(|| internal("no middle vertex in a non-bipartite orientation"))?;
            let path = vec![d.in_neighbors(u)[0], u, d.out_neighbors(u)[0]];
            (f, path, Theorem4Case::Layered, None)
        } else {
            let f = start;
            let direct = middle.iter().find_map(|&u| {
                d.in_neighbors(u).iter().find_map(|&x| {
                    d.out_neighbors(u).iter().find(|&&z| f.color(z) != f.color(x)).map(|&z| vec![x, u, z])
                })
            });
            if let Some(path) = direct {
                (f, path, Theorem4Case::Recolored, None)
            } else {
                // every middle vertex sees one color on all its neighbours
                let (u, v) = middle
                    .iter()
                    .find_map(|&u| d.out_neighbors(u).iter().find(|w| middle.contains(w)).map(|&v| (u, v)))
                    .ok_or_else(|| internal("middle layer has no internal arc"))?;
                let w = d.out_neighbors(v)[0];
                let free = 6 - f.color(u) - f.color(v);
                (f.with_color(u, free), vec![u, v, w], Theorem4Case::Recolored, Some(u))
            }
        };

    let witness = PathWitness::directed(witness);
    if !coloring.is_proper(g) {
        return Err(internal("theorem 4 coloring is not proper"));
    }
    let mut colors: Vec<usize> = witness.vertices.iter().map(|&v| coloring.color(v)).collect();
    colors.sort_unstable();
    if !witness.is_directed_path_in(d) || colors != [1, 2, 3] {
        return Err(internal("theorem 4 witness is not a directed full rainbow path"));
    }
    Ok(Theorem4Output { coloring, witness, decomposition: decomposition(case), recolored_vertex })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Graph};
    use crate::rainbow::verify_directed_rainbow;

    fn c5() -> Graph {
        generate(&Family::Cycle(5)).unwrap()
    }

    #[test]
    fn cyclic_c5() {
        let d = Orientation::new(c5(), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let out = theorem4(&d).unwrap();
        assert_eq!(out.decomposition.middle, vec![0, 1, 2, 3, 4]);
        assert_eq!(out.decomposition.case, Theorem4Case::Recolored);
        assert!(verify_directed_rainbow(&d, &out.coloring).unwrap().is_some());
    }

    #[test]
    fn layered_c5() {
        let d = Orientation::new(c5(), [(0, 1), (2, 1), (2, 3), (4, 3), (4, 0)]).unwrap();
        let out = theorem4(&d).unwrap();
        let dec = &out.decomposition;
        assert_eq!((dec.sources.clone(), dec.sinks.clone(), dec.middle.clone()), (vec![2, 4], vec![1, 3], vec![0]));
        assert_eq!(dec.case, Theorem4Case::Layered);
        assert_eq!(out.witness.vertices, vec![4, 0, 1]);
        assert_eq!(out.coloring.colors(), &[2, 3, 1, 3, 1]);
    }

    #[test]
    fn triangle() {
        let k3 = generate(&Family::Complete(3)).unwrap();
        for mask in 0..8 {
            let d = Orientation::from_mask(k3.clone(), mask);
            let out = theorem4(&d).unwrap();
            assert_eq!(out.decomposition.case, Theorem4Case::Triangle);
        }
    }

    #[test]
    fn wrong_chromatic_number() {
        let d = Orientation::from_mask(generate(&Family::Cycle(4)).unwrap(), 0);
        assert!(matches!(theorem4(&d), Err(ConstructionError::Hypothesis(_))));
        let d = Orientation::from_mask(generate(&Family::Complete(4)).unwrap(), 0);
        assert!(matches!(theorem4(&d), Err(ConstructionError::Hypothesis(_))));
    }
}
