//! Writing and reading game and partition files.

use hedonic_robust::deciders::construct_is_ir_robust;
use hedonic_robust::instances::example2;
use hedonic_robust::io::{game_to_json, load_game, load_partition, save_game, save_partition};

fn main() -> hedonic_robust::Result<()> {
    let dir = std::env::temp_dir().join("hedonic-example");
    std::fs::create_dir_all(&dir)?;

    let g = example2();
    print!("{}", game_to_json(&g)?);

    let sym = hedonic_robust::Game::additive(4, &[(0, 1, 2), (1, 2, -1), (2, 3, 5)], true)?;
    let game_path = dir.join("game.json");
    save_game(&game_path, &sym)?;
    assert_eq!(load_game(&game_path)?, sym);

    let (pi, _) = construct_is_ir_robust(&sym)?;
    let part_path = dir.join("partition.json");
    save_partition(&part_path, &pi)?;
    println!("{}", load_partition(&part_path, sym.n())?);
    Ok(())
}
