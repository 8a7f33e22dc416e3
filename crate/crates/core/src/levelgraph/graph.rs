use super::{LevelGraphError, LevelSphere};
use crate::foliation::Side;
use std::fmt::Write;

/// Regions as vertices, essential curves as edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityGraph {
    sides: Vec<Side>,
    k_points: Vec<u32>,
    edges: Vec<[usize; 2]>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Builds the graph, checking that it is a tree and that every edge joins
/// regions on opposite sides of the torus.
pub fn build_graph(s: &LevelSphere) -> Result<ConnectivityGraph, LevelGraphError> {
    let n = s.regions.len();
    if n == 0 || s.essential.len() + 1 != n {
        return Err(LevelGraphError::NotATree);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut edges = Vec::with_capacity(s.essential.len());
    for e in &s.essential {
        let [a, b] = e.regions;
        if a >= n || b >= n {
            return Err(LevelGraphError::NotATree);
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Err(LevelGraphError::NotATree);
        }
        parent[ra] = rb;
        if s.regions[a].side == s.regions[b].side {
            return Err(LevelGraphError::NotBipartite(e.curve));
        }
        edges.push([a, b]);
    }
    Ok(ConnectivityGraph {
        sides: s.regions.iter().map(|r| r.side).collect(),
        k_points: s.regions.iter().map(|r| r.k_points).collect(),
        edges,
    })
}

/// Number of endpoints; zero for a single vertex.
pub fn trunk_r(g: &ConnectivityGraph) -> usize {
    g.trunk()
}

impl ConnectivityGraph {
    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.sides.len()];
        for &[a, b] in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn endpoints(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, &d)| d == 1).map(|(v, _)| v).collect()
    }

    pub fn trunk(&self) -> usize {
        self.endpoints().len()
    }

    /// Whether every endpoint lies inside the solid torus.
    pub fn endpoints_in_a(&self) -> bool {
        self.endpoints().iter().all(|&v| self.sides[v] == Side::InV)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for (v, (side, k)) in self.sides.iter().zip(&self.k_points).enumerate() {
            let label = match side {
                Side::InV => 'A',
                Side::OutV => 'B',
            };
            writeln!(out, "  v{v} [label=\"{label}{v} k={k}\"];").expect("String write");
        }
        for [a, b] in &self.edges {
            writeln!(out, "  v{a} -- v{b};").expect("String write");
        }
        out.push_str("}\n");
        out
    }
}
