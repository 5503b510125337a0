//! Graphviz export. Nodes appear in carrier order and edges in
//! lexicographic order of their endpoints.

use std::fmt::Write;

use crate::poset::FinitePoset;
use crate::space::FiniteSpace;
use crate::subset::Subset;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn header(name: &str) -> String {
    format!(
        "digraph {} {{\n  rankdir=BT;\n  node [shape=circle];\n",
        quote(name)
    )
}

fn node(out: &mut String, label: &str, shaded: bool) {
    if shaded {
        writeln!(out, "  {} [style=filled, fillcolor=gray];", quote(label)).unwrap();
    } else {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
}

/// Hasse diagram of `p`, shading the points of `highlight`.
pub fn poset_dot(p: &FinitePoset, name: &str, highlight: Subset) -> String {
    let mut out = header(name);
    for x in 0..p.len() {
        node(&mut out, p.label(x), highlight.contains(x));
    }
    let mut covers = p.covers();
    covers.sort();
    for (a, b) in covers {
        writeln!(out, "  {} -> {};", quote(p.label(a)), quote(p.label(b))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Specialization preorder of `s`: an arrow `x -> y` for each cover
/// `x < y`, and a two-headed arrow joining points with equal closures.
pub fn space_dot(s: &FiniteSpace, name: &str, highlight: Subset) -> String {
    let mut out = header(name);
    for x in 0..s.len() {
        node(&mut out, s.label(x), highlight.contains(x));
    }
    let n = s.len();
    let le = |a: usize, b: usize| s.specializes(a, b);
    let lt = |a: usize, b: usize| le(a, b) && !le(b, a);
    for a in 0..n {
        for b in 0..n {
            if a < b && le(a, b) && le(b, a) {
                writeln!(
                    out,
                    "  {} -> {} [dir=both];",
                    quote(s.label(a)),
                    quote(s.label(b))
                )
                .unwrap();
            } else if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                writeln!(out, "  {} -> {};", quote(s.label(a)), quote(s.label(b))).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_two() {
        let p = FinitePoset::from_labeled(&["a", "b"], &[("a", "b")]).unwrap();
        let d = poset_dot(&p, "C2", Subset::EMPTY);
        assert_eq!(
            d,
            "digraph \"C2\" {\n  rankdir=BT;\n  node [shape=circle];\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\";\n}\n"
        );
    }

    #[test]
    fn highlight_and_preorder() {
        let p = FinitePoset::chain(2);
        assert!(poset_dot(&p, "X", Subset::singleton(1)).contains("\"1\" [style=filled"));
        let d = space_dot(&FiniteSpace::indiscrete(2), "I", Subset::EMPTY);
        assert!(d.contains("\"0\" -> \"1\" [dir=both];"));
        let d = space_dot(&FiniteSpace::sierpinski(), "S", Subset::EMPTY);
        assert!(d.contains("\"0\" -> \"1\";"));
    }
}
