use artin_markings::ArtinGroup;

fn main() {
    let a2 = ArtinGroup::from_type_str("A2").unwrap();
    let m = a2.standard_transversals(&a2.enumerate_maximal_standard()[0]).unwrap();
    for bound in 1..=4 {
        let hits = a2.marking_stabilizer_probe(&m, bound);
        let shown: Vec<String> = hits.iter().map(|h| a2.format_element(h)).collect();
        println!("L = {bound}: {}", shown.join(", "));
    }
}
