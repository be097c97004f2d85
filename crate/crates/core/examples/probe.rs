use kostka::fusion::{check_fusion_kostka, check_z_independence, fusion_character, schur_weyl_check};
use kostka::partition::Partition;

fn main() {
    let t0 = std::time::Instant::now();
    for n in [2usize, 3] {
        for size in 1..=4u32 {
            for mu in Partition::all(size) {
                let r = fusion_character(mu.parts(), n, None).unwrap();
                check_fusion_kostka(&r).unwrap();
                check_z_independence(mu.parts(), n).unwrap();
            }
        }
        println!("fusion all mu |- <=4, n={n}: {:?}", t0.elapsed());
    }
    let r = fusion_character(&[1, 1, 1, 1, 1], 2, None).unwrap();
    check_fusion_kostka(&r).unwrap();
    check_z_independence(&[1, 1, 1, 1, 1], 2).unwrap();
    println!("fusion (1^5) n=2: {:?}", t0.elapsed());
    for (nb, rk) in [(2u32, 2usize), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)] {
        schur_weyl_check(nb, rk).unwrap();
        println!("schur-weyl N={nb} n={rk}: {:?}", t0.elapsed());
    }
}
