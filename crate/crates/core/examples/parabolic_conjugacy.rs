use artin_markings::{ArtinGroup, GenSet};

fn main() {
    let e8 = ArtinGroup::from_type_str("E8").unwrap();
    let cg = e8.build_conjugacy_graph();
    let x = GenSet::parse("s1,s2,s3,s4", 8).unwrap();
    let y = GenSet::parse("s5,s6,s7,s8", 8).unwrap();
    println!("E8: A_{x} conjugate to A_{y}: {}", cg.standard_conjugate(x, y));
    if let Some(path) = cg.path(x, y) {
        for e in path {
            let (a, b) = e.ends();
            println!("  inside {{{}}}: {{{}}} -> {{{}}}", e.y.key(), a.key(), b.key());
        }
    }

    // classes of connected subsets of D5
    let d5 = ArtinGroup::from_type_str("D5").unwrap();
    let cg = d5.build_conjugacy_graph();
    let mut seen = Vec::new();
    for bits in 1..32u64 {
        let s = GenSet(bits);
        if !d5.graph.is_connected(s) || seen.iter().any(|&t| cg.standard_conjugate(s, t)) {
            continue;
        }
        seen.push(s);
        let class: Vec<String> = (1..32u64)
            .map(GenSet)
            .filter(|&t| cg.standard_conjugate(s, t))
            .map(|t| format!("{{{}}}", t.key()))
            .collect();
        println!("D5 class: {}", class.join(" "));
    }
}
