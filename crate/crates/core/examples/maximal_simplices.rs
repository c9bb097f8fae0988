use artin_markings::{ArtinGroup, CparabSimplex, GenSet};

fn main() {
    for ty in ["A3", "B3", "A4", "D4"] {
        let g = ArtinGroup::from_type_str(ty).unwrap();
        let all = g.enumerate_maximal_standard();
        println!("{ty}: {} maximal standard simplices", all.len());
        for xs in all.iter().take(3) {
            let names: Vec<String> = xs.iter().map(|x| format!("{{{}}}", x.key())).collect();
            let lv = g.standard_levels(xs);
            println!("  {}  levels {:?}", names.join(" "), lv.level_of);
        }
    }

    let e6 = ArtinGroup::from_type_str("E6").unwrap();
    let subsets: Vec<GenSet> =
        ["s1", "s1,s2", "s4", "s5,s6", "s6"].iter().map(|s| GenSet::parse(s, 6).unwrap()).collect();
    let pi = CparabSimplex::standard(&e6, &subsets);
    let w = e6.is_maximal_standard(&pi).unwrap().unwrap();
    println!("E6 Π is maximal; missing generator s{}", w.t + 1);
    for (k, level) in e6.decompose_levels(&pi).unwrap().levels.iter().enumerate() {
        let names: Vec<String> = level.iter().map(|&i| format!("{{{}}}", subsets[i].key())).collect();
        println!("  level {}: {}", k + 1, names.join(" "));
    }
}
