//! The puzzle side: shortest solutions, Frame-Stewart counts, and the
//! distance against the diameter.

use hanoi_groups::hanoi::{
    distance_vs_diameter_report, frame_stewart_count, frame_stewart_moves, frame_stewart_split,
    puzzle_path, DiskConfig,
};

fn main() -> hanoi_groups::Result<()> {
    let path = puzzle_path(4, &DiskConfig::tower(0, 4), &DiskConfig::tower(1, 4))?;
    let steps: Vec<String> = path.iter().map(|c| c.word().to_string()).collect();
    println!(
        "4 pegs, 4 disks, {} moves: {}",
        path.len() - 1,
        steps.join(" ")
    );

    let moves: Vec<String> = frame_stewart_moves(3, 0, 1)
        .iter()
        .map(|m| format!("{}->{}", m.from, m.to))
        .collect();
    println!("3 pegs, 3 disks: {}", moves.join(" "));

    for k in 3..=6 {
        let counts: Vec<String> = (1..=12)
            .map(|n| frame_stewart_count(n, k).to_string())
            .collect();
        println!("FS(n,{k}) n=1..12: {}", counts.join(" "));
    }
    println!("split for FS(10,4): t={:?}", frame_stewart_split(10, 4));

    for row in distance_vs_diameter_report(6, 4)?.rows {
        println!(
            "k=4 n={}: distance {} FS {} diameter {}",
            row.n, row.distance, row.frame_stewart, row.diameter
        );
    }
    Ok(())
}
