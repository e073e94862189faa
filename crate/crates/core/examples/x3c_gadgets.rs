//! Builds both exact-cover gadgets and checks the partition induced by a
//! cover.

use hedonic_robust::instances::{
    cover_partition, gen_x3c_cis_gadget, gen_x3c_is_gadget, X3cInstance,
};
use hedonic_robust::robustness::deletion_set_count;
use hedonic_robust::{is_robust, Concept};

fn main() -> hedonic_robust::Result<()> {
    let x3c = X3cInstance::new(6, vec![[0, 1, 2], [2, 3, 4], [3, 4, 5]])?;
    let cover = [0, 2];
    for (gadget, concept) in [
        (gen_x3c_cis_gadget(&x3c)?, Concept::Cis),
        (gen_x3c_is_gadget(&x3c)?, Concept::Is),
    ] {
        let k = gadget.variant.k();
        let pi = cover_partition(&gadget, &cover)?;
        let v = is_robust(&gadget.game, &pi, concept, k)?;
        println!(
            "{:?} gadget: {} players, {} deletion sets, {concept}-robust for k={k}: {}",
            gadget.variant,
            gadget.game.n(),
            deletion_set_count(gadget.game.n(), k),
            v.holds()
        );
        for c in pi.coalitions() {
            let names: Vec<String> = c.iter().map(|&p| gadget.labels[p].to_string()).collect();
            println!("  {}", names.join(" "));
        }
    }
    Ok(())
}
