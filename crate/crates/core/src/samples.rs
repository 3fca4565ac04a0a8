//! Small reference instances used by tests, golden files and documentation.

use crate::graph::{Graph, GraphBuilder};
use crate::instance::Instance;
use crate::qbf::QSat2Formula;

/// Five vertices a..e whose minimum non-empty secure set is {a, b, c}.
pub const FIVE_VERTEX_TEXT: &str = "\
c five-vertex graph; minimum non-empty secure set is {a,b,c}
p ss 5 8
e 1 2
e 1 3
e 1 4
e 2 4
e 2 5
e 3 4
e 4 5
e 3 5
k 3
name 1 a
name 2 b
name 3 c
name 4 d
name 5 e
";

/// Seven vertices exercising all three constraint kinds: `d` and `f` are
/// forbidden, `a` and `g` necessary, `b`/`c` complementary.
pub const CONSTRAINED_TEXT: &str = "\
c forbidden d,f; necessary a,g; complementary b,c
p ss 7 7
e 1 2
e 2 5
e 1 5
e 4 5
e 5 6
e 3 5
e 3 7
k 3
forbid 4
forbid 6
need 1
need 7
comp 2 3
name 1 a
name 2 b
name 3 c
name 4 d
name 5 e
name 6 f
name 7 g
";

/// ∃x1 ∃x2 ∃x3 ∀y1 ∀y2 (¬x1 ∧ x2 ∧ y1) ∨ (x3 ∧ ¬y1 ∧ y2) ∨ (x3 ∧ ¬y1 ∧ ¬y2),
/// with y1, y2 numbered 4 and 5.
pub const THREE_TERM_QDNF: &str = "\
c true; the only witness is x1=F x2=T x3=T
p qdnf 5 3
e 1 2 3 0
a 4 5 0
-1 2 4 0
3 -4 5 0
3 -4 -5 0
";

pub fn five_vertex_graph() -> Graph {
    let mut b = GraphBuilder::new();
    for l in ["a", "b", "c", "d", "e"] {
        b.add_vertex(l).unwrap();
    }
    for (u, v) in [(0, 1), (2, 0), (0, 3), (3, 1), (1, 4), (2, 3), (3, 4), (2, 4)] {
        b.add_edge(u, v).unwrap();
    }
    b.build()
}

pub fn five_vertex_instance() -> Instance {
    Instance::plain(five_vertex_graph(), 3).unwrap()
}

pub fn constrained_graph() -> Graph {
    let mut b = GraphBuilder::new();
    for l in ["a", "b", "c", "d", "e", "f", "g"] {
        b.add_vertex(l).unwrap();
    }
    for (u, v) in [(0, 1), (1, 4), (4, 0), (3, 4), (4, 5), (4, 2), (2, 6)] {
        b.add_edge(u, v).unwrap();
    }
    b.build()
}

pub fn constrained_instance() -> Instance {
    Instance::builder(constrained_graph(), 3)
        .forbidden([3, 5])
        .necessary([0, 6])
        .pairs([(1, 2)])
        .build()
        .unwrap()
}

pub fn three_term_formula() -> QSat2Formula {
    crate::qbf::parse_qdnf(THREE_TERM_QDNF).unwrap()
}
