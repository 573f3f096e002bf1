macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(k_arithmetic, "k_arithmetic.rs");
example!(count_partitions, "count_partitions.rs");
example!(list_partitions, "list_partitions.rs");
example!(partition_lengths, "partition_lengths.rs");
example!(comet_data, "comet_data.rs");
example!(oracle_check, "oracle_check.rs");
example!(verify_bfile, "verify_bfile.rs");

#[test]
fn k_arithmetic_example_runs() {
    k_arithmetic::run_example().expect("k_arithmetic example should run");
}

#[test]
fn count_partitions_example_runs() {
    count_partitions::run_example().expect("count_partitions example should run");
}

#[test]
fn list_partitions_example_runs() {
    list_partitions::run_example().expect("list_partitions example should run");
}

#[test]
fn partition_lengths_example_runs() {
    partition_lengths::run_example().expect("partition_lengths example should run");
}

#[test]
fn comet_data_example_runs() {
    comet_data::run_example().expect("comet_data example should run");
}

#[test]
fn oracle_check_example_runs() {
    oracle_check::run_example().expect("oracle_check example should run");
}

#[test]
fn verify_bfile_example_runs() {
    verify_bfile::run_example().expect("verify_bfile example should run");
}
