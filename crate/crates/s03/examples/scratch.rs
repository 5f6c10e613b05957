use s03::reps::{fundamental_x_display_comparison, ZLinearFamily};

fn main() {
    let fam = ZLinearFamily::fundamental();
    println!("component formulas ok: {}", fam.check_component_formulas());
    let mm = fundamental_x_display_comparison();
    println!("display mismatches: {}", mm.len());
    for m in mm.iter().take(6) {
        println!("  {} {} ({},{})\n    computed:  {}\n    displayed: {:?}", m.table, m.generator, m.row, m.col, m.computed, m.displayed);
    }
}
