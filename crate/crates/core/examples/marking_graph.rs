use artin_markings::ArtinGroup;

fn main() {
    let a2 = ArtinGroup::from_type_str("A2").unwrap();
    let seed = a2.standard_transversals(&a2.enumerate_maximal_standard()[0]).unwrap();
    let graph = a2.bfs(&seed, 2).unwrap();
    println!("A2, radius 2: {} markings, {} edges", graph.nodes.len(), graph.edges.len());
    print!("{}", graph.export("dot").unwrap());

    for ty in ["A3", "B3", "A4", "D4", "I2(7)"] {
        let g = ArtinGroup::from_type_str(ty).unwrap();
        let r = g.standard_marking_connectivity().unwrap();
        println!(
            "{ty}: {} all-standard markings, {} flips, connected {}, diameter {:?} (bound {})",
            r.markings, r.edges, r.connected, r.diameter, r.bound
        );
    }
}
