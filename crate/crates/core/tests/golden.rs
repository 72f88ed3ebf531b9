use airpockets::enumerate::count_table_brute;
use airpockets::AvoidanceClass;
use num_bigint::BigInt;

const A114465: &str = include_str!("../golden/a114465.txt");

fn read_bfile(text: &str) -> Vec<(usize, BigInt)> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (i, v) = l.split_once(' ').expect("b-file line is `index value`");
            (i.parse().unwrap(), v.trim().parse().unwrap())
        })
        .collect()
}

#[test]
fn unrestricted_returns_match_a114465() {
    let terms = read_bfile(A114465);
    assert_eq!(terms.len(), 10);
    let table = count_table_brute(9, AvoidanceClass::Unrestricted);
    for (n, value) in terms {
        assert_eq!(table.get(n, 0), value, "n = {n}");
    }
}
