use artin_markings::cli::payload::format_marking;
use artin_markings::ArtinGroup;

fn main() {
    let a3 = ArtinGroup::from_type_str("A3").unwrap();
    let m = a3.standard_transversals(&a3.enumerate_maximal_standard()[1]).unwrap();
    println!("M = {}", format_marking(&a3, &m));

    for j in 0..m.len() {
        for inverse in [false, true] {
            let t = a3.twist_move(&m, j, inverse).unwrap();
            println!("twist {j}{}: {}", if inverse { "⁻¹" } else { "" }, format_marking(&a3, &t));
        }
        for f in a3.enumerate_flip_moves(&m, j).unwrap() {
            println!("flip {j}: {}", format_marking(&a3, &f));
        }
    }

    let q = a3.transversals_with_projection(&m, 0, 1).unwrap().remove(0);
    let target = m.with_transverse(0, q);
    let path = a3.transversal_swap_path(&m, &target).unwrap();
    println!("swap path with {} moves:", path.len() - 1);
    for step in &path {
        println!("  {}", format_marking(&a3, step));
    }
}
