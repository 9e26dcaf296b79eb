//! Graph export writers: GraphML 1.0 and Graphviz DOT, for both the
//! paper-author incidence graph and the co-authorship graph.
//!
//! Output is deterministic: nodes in index order, edges in the graphs'
//! canonical orders, no timestamps.

use std::fmt::Write as _;

use crate::bigraph::BipartiteGraph;
use crate::coauthor::{coauthor_degrees, components, CoauthorGraph};

const GRAPHML_OPEN: &str = concat!(
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n",
    "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n",
    "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns ",
    "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n",
);

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(ch),
        }
    }
    out
}

fn dot_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out
}

/// Paper-author incidence graph as GraphML: papers are `p{i}` nodes with
/// kind "paper", authors `a{j}` with kind "author".
pub fn pag_graphml(pag: &BipartiteGraph) -> String {
    let mut out = String::from(GRAPHML_OPEN);
    out.push_str("  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n");
    out.push_str("  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n");
    out.push_str("  <graph id=\"pag\" edgedefault=\"undirected\">\n");
    for (i, id) in pag.paper_ids().iter().enumerate() {
        let _ = writeln!(
            out,
            "    <node id=\"p{i}\"><data key=\"kind\">paper</data><data key=\"label\">{}</data></node>",
            xml_escape(id)
        );
    }
    for (j, key) in pag.author_keys().iter().enumerate() {
        let _ = writeln!(
            out,
            "    <node id=\"a{j}\"><data key=\"kind\">author</data><data key=\"label\">{}</data></node>",
            xml_escape(&key.display())
        );
    }
    for (k, (i, j)) in pag.edges().enumerate() {
        let _ = writeln!(out, "    <edge id=\"e{k}\" source=\"p{i}\" target=\"a{j}\"/>");
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

/// Paper-author incidence graph as DOT: papers drawn as boxes, authors as
/// circles.
pub fn pag_dot(pag: &BipartiteGraph) -> String {
    let mut out = String::from("graph pag {\n");
    for (i, id) in pag.paper_ids().iter().enumerate() {
        let _ = writeln!(out, "  p{i} [shape=box, label=\"{}\"];", dot_escape(id));
    }
    for (j, key) in pag.author_keys().iter().enumerate() {
        let _ = writeln!(
            out,
            "  a{j} [shape=circle, label=\"{}\"];",
            dot_escape(&key.display())
        );
    }
    for (i, j) in pag.edges() {
        let _ = writeln!(out, "  p{i} -- a{j};");
    }
    out.push_str("}\n");
    out
}

/// Co-authorship graph as GraphML with papers written, collaborator count,
/// and connected-component id on nodes, and shared-paper count on edges.
pub fn cag_graphml(cg: &CoauthorGraph) -> String {
    let degrees = coauthor_degrees(cg);
    let component_ids = component_index(cg);
    let mut out = String::from(GRAPHML_OPEN);
    out.push_str("  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n");
    out.push_str("  <key id=\"papers\" for=\"node\" attr.name=\"papers\" attr.type=\"long\"/>\n");
    out.push_str(
        "  <key id=\"coauthors\" for=\"node\" attr.name=\"coauthors\" attr.type=\"long\"/>\n",
    );
    out.push_str(
        "  <key id=\"component\" for=\"node\" attr.name=\"component\" attr.type=\"long\"/>\n",
    );
    out.push_str("  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n");
    out.push_str("  <graph id=\"cag\" edgedefault=\"undirected\">\n");
    for (j, key) in cg.author_keys().iter().enumerate() {
        let _ = writeln!(
            out,
            "    <node id=\"a{j}\"><data key=\"label\">{}</data>\
<data key=\"papers\">{}</data><data key=\"coauthors\">{}</data>\
<data key=\"component\">{}</data></node>",
            xml_escape(&key.display()),
            cg.papers_per_author()[j],
            degrees[j],
            component_ids[j],
        );
    }
    for (k, (a, b, w)) in cg.edges().enumerate() {
        let _ = writeln!(
            out,
            "    <edge id=\"e{k}\" source=\"a{a}\" target=\"a{b}\"><data key=\"weight\">{w}</data></edge>"
        );
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

/// Co-authorship graph as DOT; every author is a circle, edge weight is the
/// number of shared papers.
pub fn cag_dot(cg: &CoauthorGraph) -> String {
    let mut out = String::from("graph cag {\n");
    for (j, key) in cg.author_keys().iter().enumerate() {
        let _ = writeln!(
            out,
            "  a{j} [shape=circle, label=\"{}\"];",
            dot_escape(&key.display())
        );
    }
    for (a, b, w) in cg.edges() {
        let _ = writeln!(out, "  a{a} -- a{b} [weight={w}];");
    }
    out.push_str("}\n");
    out
}

/// Component id per author, with components numbered by their smallest
/// member index.
fn component_index(cg: &CoauthorGraph) -> Vec<usize> {
    let mut ids = vec![0usize; cg.author_count()];
    for (cid, comp) in components(cg).iter().enumerate() {
        for &m in &comp.members {
            ids[m] = cid;
        }
    }
    ids
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::build_pag;
    use crate::coauthor::build_cag;
    use crate::corpus::{parse_corpus, Corpus, CorpusFormat};

    fn corpus(text: &str) -> Corpus {
        parse_corpus(text.as_bytes(), CorpusFormat::Jsonl).unwrap()
    }

    fn archive() -> Corpus {
        corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A1\",\"A2\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"A2\",\"A3\",\"A4\"]}\n",
        )
    }

    #[test]
    fn pag_graphml_lists_all_nodes_and_edges() {
        let pag = build_pag(&archive());
        let xml = pag_graphml(&pag);
        assert!(xml.starts_with("<?xml version=\"1.0\""));
        assert!(xml.contains("http://graphml.graphdrawing.org/xmlns"));
        assert_eq!(xml.matches("<node ").count(), 6);
        assert_eq!(xml.matches("<edge ").count(), 5);
        assert_eq!(xml.matches(">paper<").count(), 2);
        assert_eq!(xml.matches(">author<").count(), 4);
        assert!(xml.contains("<edge id=\"e0\" source=\"p0\" target=\"a0\"/>"));
        assert!(xml.ends_with("</graphml>\n"));
    }

    #[test]
    fn pag_dot_uses_box_for_papers_and_circle_for_authors() {
        let dot = pag_dot(&build_pag(&archive()));
        assert!(dot.starts_with("graph pag {"));
        assert_eq!(dot.matches("shape=box").count(), 2);
        assert_eq!(dot.matches("shape=circle").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.contains("p0 -- a0;"));
    }

    #[test]
    fn cag_graphml_carries_degrees_component_and_weight() {
        let cag = build_cag(&build_pag(&archive()));
        let xml = cag_graphml(&cag);
        assert_eq!(xml.matches("<node ").count(), 4);
        assert_eq!(xml.matches("<edge ").count(), 4);
        // A2 wrote 2 papers and has 3 collaborators.
        assert!(xml.contains(
            "<node id=\"a1\"><data key=\"label\">a2</data><data key=\"papers\">2</data>\
<data key=\"coauthors\">3</data><data key=\"component\">0</data></node>"
        ));
        assert!(xml.contains("<data key=\"weight\">1</data>"));
    }

    #[test]
    fn cag_dot_weights_every_edge() {
        let cag = build_cag(&build_pag(&archive()));
        let dot = cag_dot(&cag);
        assert!(dot.starts_with("graph cag {"));
        assert_eq!(dot.matches("[weight=1]").count(), 4);
    }

    #[test]
    fn repeated_collaboration_shows_in_dot_weight() {
        let cag = build_cag(&build_pag(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A\",\"B\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"A\",\"B\"]}\n",
        )));
        assert!(cag_dot(&cag).contains("a0 -- a1 [weight=2];"));
    }

    #[test]
    fn xml_metacharacters_in_names_are_escaped() {
        let pag = build_pag(&corpus(
            "{\"id\":\"p<1>&\",\"year\":2000,\"authors\":[\"Juan O&Brien\"]}\n",
        ));
        let xml = pag_graphml(&pag);
        assert!(xml.contains("p&lt;1&gt;&amp;"));
        assert!(xml.contains("o&amp;brien, j"));
        assert!(!xml.contains("p<1>"));
    }

    #[test]
    fn dot_quotes_and_backslashes_are_escaped() {
        let pag = build_pag(&corpus(
            "{\"id\":\"p\\\"q\\\\r\",\"year\":2000,\"authors\":[\"Solo X\"]}\n",
        ));
        let dot = pag_dot(&pag);
        assert!(dot.contains("label=\"p\\\"q\\\\r\""));
    }

    #[test]
    fn separate_components_get_distinct_ids() {
        let cag = build_cag(&build_pag(&corpus(
            "{\"id\":\"p1\",\"year\":2000,\"authors\":[\"A\",\"B\"]}\n\
             {\"id\":\"p2\",\"year\":2001,\"authors\":[\"C\",\"D\"]}\n",
        )));
        let xml = cag_graphml(&cag);
        assert!(xml.contains("<data key=\"component\">0</data>"));
        assert!(xml.contains("<data key=\"component\">1</data>"));
    }
}
