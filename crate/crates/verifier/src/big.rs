//! `(C_p⁴ × C_q⁴) : Sym(4)` on `4p + 4q` points, with `Sym(4)` permuting
//! the four `p`-blocks and the four `q`-blocks simultaneously. Too large to
//! enumerate at `(p, q) = (5, 3)`; every quantity comes from conjugation
//! orbits of single elements.

use hallcheck_core::{GeneratedGroup, Permutation};
use serde::{Deserialize, Serialize};

pub struct BigExample {
    pub p: u64,
    pub q: u64,
    pub g: GeneratedGroup,
    /// Hall `{2, p}`-subgroup `p⁴ : D` with `D = ⟨(1 2)(3 4), (1 2 3 4)⟩`.
    pub a: GeneratedGroup,
    /// Hall `{3, q}`-subgroup `q⁴ : ⟨(1 2 3)⟩`.
    pub b: GeneratedGroup,
    /// `e_1 e_2⁻¹`.
    pub x: Permutation,
    /// `f_1 f_2⁻¹`.
    pub y: Permutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigExampleCounts {
    pub order: u64,
    pub centralizer_xy: u64,
    pub centralizer_a_x: u64,
    pub centralizer_b_y: u64,
    pub commute: bool,
}

impl BigExampleCounts {
    /// `|G_xy| > |A_x| |B_y|`.
    pub fn exceeds(&self) -> bool {
        self.centralizer_xy > self.centralizer_a_x * self.centralizer_b_y
    }
}

impl BigExample {
    pub fn new(p: u64, q: u64) -> BigExample {
        assert!(p > 3 && q > 2 && p != q);
        let degree = (4 * p + 4 * q) as usize;
        let (pu, qu) = (p as u32, q as u32);
        let block_p = |i: u32, j: u32| i * pu + j;
        let block_q = |i: u32, j: u32| 4 * pu + i * qu + j;
        let basis = |p_side: bool, i: u32, power: u32| {
            let mut img: Vec<u32> = (0..degree as u32).collect();
            let (size, at): (u32, &dyn Fn(u32, u32) -> u32) = if p_side {
                (pu, &block_p)
            } else {
                (qu, &block_q)
            };
            for j in 0..size {
                img[at(i, j) as usize] = at(i, (j + power) % size);
            }
            Permutation::from_images(img).expect("block cycle")
        };
        // Sym(4) on block indices, moving both block systems at once.
        let blocks = |sigma: [u32; 4]| {
            let mut img = vec![0u32; degree];
            for i in 0..4 {
                for j in 0..pu {
                    img[block_p(i, j) as usize] = block_p(sigma[i as usize], j);
                }
                for j in 0..qu {
                    img[block_q(i, j) as usize] = block_q(sigma[i as usize], j);
                }
            }
            Permutation::from_images(img).expect("block permutation")
        };
        let e: Vec<Permutation> = (0..4).map(|i| basis(true, i, 1)).collect();
        let f: Vec<Permutation> = (0..4).map(|i| basis(false, i, 1)).collect();
        let transposition = blocks([1, 0, 2, 3]);
        let four_cycle = blocks([1, 2, 3, 0]);
        let double = blocks([1, 0, 3, 2]);
        let three_cycle = blocks([1, 2, 0, 3]);
        let x = &e[0] * &basis(true, 1, pu - 1);
        let y = &f[0] * &basis(false, 1, qu - 1);
        let p4 = p.pow(4);
        let q4 = q.pow(4);
        let g = GeneratedGroup {
            degree,
            generators: vec![
                e[0].clone(),
                f[0].clone(),
                transposition,
                four_cycle.clone(),
            ],
            order: p4 * q4 * 24,
        };
        let a = GeneratedGroup {
            degree,
            generators: e.iter().cloned().chain([double, four_cycle]).collect(),
            order: p4 * 8,
        };
        let b = GeneratedGroup {
            degree,
            generators: f.iter().cloned().chain([three_cycle]).collect(),
            order: q4 * 3,
        };
        BigExample {
            p,
            q,
            g,
            a,
            b,
            x,
            y,
        }
    }

    pub fn counts(&self) -> BigExampleCounts {
        let xy = &self.x * &self.y;
        BigExampleCounts {
            order: self.g.order,
            centralizer_xy: self.g.centralizer_order(&xy),
            centralizer_a_x: self.a.centralizer_order(&self.x),
            centralizer_b_y: self.b.centralizer_order(&self.y),
            commute: xy == &self.y * &self.x,
        }
    }
}
