//! The index of a generalized Takiff algebra q<n> is (n+1) times the index
//! of q, demonstrated on sl2, sl3, and the Heisenberg algebra.

use takiff_lab::builders::{classical, heisenberg, takiff};

fn main() {
    let bases = vec![
        ("sl2", classical('A', 1).unwrap().base),
        ("sl3", classical('A', 2).unwrap().base),
        ("heis1", heisenberg(1)),
    ];
    for (name, q) in bases {
        let ind_q = q.index(8, 0);
        for n in 1..=3 {
            let t = takiff(&q, n);
            let ind_t = t.total.index(10, 0);
            println!("{name}<{n}>: dim {}, index {ind_t} = ({}+1) * {ind_q}", t.total.dim, n);
            assert_eq!(ind_t, (n + 1) * ind_q);
        }
    }
}
