//! Outerplanarity via the apex construction: `G` is outerplanar iff `G` plus
//! a vertex adjacent to everything is planar.

use serde::{Deserialize, Serialize};

use super::certificate::{verify_embedding, verify_subdivision, RotationSystem, Subdivision, SubdivisionKind};
use super::planarity::{find_clique, minimal_edge_set, planar_embedding, subdivision_from_minimal, test_planar};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OuterplanarCertificate {
    /// Planar rotation system of the apex extension `g.with_apex()`.
    ApexEmbedding(RotationSystem),
    /// K4 or K2,3 subdivision in `g`.
    ForbiddenSubdivision(Subdivision),
}

pub fn is_outerplanar(g: &Graph) -> bool {
    let active = g.vertex_count() - g.isolated_vertices().len();
    if active >= 2 && g.edge_count() > 2 * active - 3 {
        return false;
    }
    test_planar(&g.with_apex())
}

pub fn outerplanarity(g: &Graph) -> (bool, OuterplanarCertificate) {
    if let Some(rot) = planar_embedding(&g.with_apex()) {
        return (true, OuterplanarCertificate::ApexEmbedding(rot));
    }
    (
        false,
        OuterplanarCertificate::ForbiddenSubdivision(outerplanar_obstruction(g)),
    )
}

/// K4 or K2,3 subdivision in a graph that is not outerplanar.
pub fn outerplanar_obstruction(g: &Graph) -> Subdivision {
    if let Some(clique) = find_clique(g, 4) {
        return Subdivision::direct(SubdivisionKind::K4, clique.iter().map(|&v| g.label(v)).collect());
    }
    let edges = minimal_edge_set(g, |h| !test_planar(&h.with_apex()));
    subdivision_from_minimal(g, &edges).expect("edge-minimal non-outerplanar graph is a K4 or K2,3 subdivision")
}

pub fn verify_outerplanar_certificate(g: &Graph, cert: &OuterplanarCertificate) -> bool {
    match cert {
        OuterplanarCertificate::ApexEmbedding(rot) => verify_embedding(&g.with_apex(), rot),
        OuterplanarCertificate::ForbiddenSubdivision(sub) => {
            matches!(sub.kind, SubdivisionKind::K4 | SubdivisionKind::K23) && verify_subdivision(g, sub)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &Graph) -> (bool, OuterplanarCertificate) {
        let (ok, cert) = outerplanarity(g);
        assert!(verify_outerplanar_certificate(g, &cert));
        assert_eq!(ok, is_outerplanar(g));
        (ok, cert)
    }

    #[test]
    fn k4_is_not_outerplanar() {
        let (ok, cert) = check(&Graph::complete(4));
        assert!(!ok);
        let OuterplanarCertificate::ForbiddenSubdivision(s) = cert else {
            panic!()
        };
        assert_eq!(s.kind, SubdivisionKind::K4);
    }

    #[test]
    fn k23_is_not_outerplanar() {
        let (ok, cert) = check(&Graph::complete_bipartite(2, 3));
        assert!(!ok);
        let OuterplanarCertificate::ForbiddenSubdivision(s) = cert else {
            panic!()
        };
        assert_eq!(s.kind, SubdivisionKind::K23);
    }

    #[test]
    fn outerplanar_examples() {
        assert!(check(&Graph::cycle(6)).0);
        assert!(check(&Graph::unlabeled(0, [])).0);
        assert!(check(&Graph::unlabeled(3, [])).0);
        // triangle with three ears
        let g = Graph::unlabeled(
            6,
            [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)],
        );
        assert!(check(&g).0);
        // subdivided K2,3 with no K4
        let g = Graph::unlabeled(7, [(0, 2), (2, 1), (0, 3), (3, 5), (5, 1), (0, 4), (4, 6), (6, 1)]);
        let (ok, cert) = check(&g);
        assert!(!ok);
        assert!(matches!(
            cert,
            OuterplanarCertificate::ForbiddenSubdivision(Subdivision {
                kind: SubdivisionKind::K23,
                ..
            })
        ));
    }

    #[test]
    fn nonplanar_graphs_get_obstructions() {
        assert!(!check(&Graph::complete_bipartite(3, 3)).0);
        assert!(!check(&Graph::complete(6)).0);
    }
}
