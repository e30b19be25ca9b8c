//! Cross-checks the closed-form orbit invariants (centralizer dimension,
//! differential rank, stratum index) against direct linear algebra on
//! explicit nilpotent matrices of each Jordan type.

use takiff_lab::orbits::{enumerate_partitions, matrix_oracle, OrbitRecord};

fn main() {
    for (tag, size) in [('A', 4), ('B', 5), ('C', 6), ('D', 6)] {
        for p in enumerate_partitions(tag, size).unwrap() {
            let formula = OrbitRecord::from_partition(&p).unwrap();
            let oracle = matrix_oracle(&p).unwrap();
            println!(
                "{tag} {p}: z = {} (oracle {}), dpi rank = {} (oracle {}), stratum = {} (oracle {})",
                formula.centralizer_dim,
                oracle.centralizer_dim,
                formula.rank_dpi,
                oracle.rank_dpi,
                formula.stratum_index,
                oracle.stratum_index
            );
            assert_eq!(formula.centralizer_dim, oracle.centralizer_dim);
            assert_eq!(formula.rank_dpi, oracle.rank_dpi);
            assert_eq!(formula.stratum_index, oracle.stratum_index);
        }
    }
}
