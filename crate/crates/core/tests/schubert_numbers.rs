use realgrass::algebra::Int;
use realgrass::schubert::*;

fn data(items: &[&str], m: usize, p: usize) -> SchubertData {
    SchubertData::parse(items, m, p).unwrap()
}

#[test]
fn published_intersection_numbers() {
    let cases = [
        (data(&["J2^4"], 4, 2), 3),
        (data(&["135^2", "J1^3"], 3, 3), 6),
        (data(&["135^4"], 4, 3), 8),
        (data(&["J2^4", "J1"], 3, 3), 3),
    ];
    for (d, want) in cases {
        assert_eq!(intersection_number(&d).unwrap(), Int::from(want), "{}", d.label());
    }
}

#[test]
fn hypersurface_numbers_match_closed_form() {
    for m in 1..=12usize {
        for p in 1..=12usize {
            if m * p <= 12 {
                let d = SchubertData::hypersurface(m, p);
                assert_eq!(intersection_number(&d).unwrap(), d_closed_form(m, p), "({}, {})", m, p);
            }
        }
    }
}
