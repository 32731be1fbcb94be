//! End to end: three raw transversal prescriptions in, a certificate and a
//! full square out. Shows all three completion routes and certificate
//! verification, including what happens to a tampered certificate.

use dcls::completer::{complete, completed_square, verify_certificate, Method, TransversalTriple};
use dcls::modmath::Prime;
use dcls::search::SearchPolicy;

fn main() -> dcls::Result<()> {
    let p = Prime::new(11)?;
    let policy = SearchPolicy::with_seed(p, 42);

    // a raw, unnormalized prescription
    let t = TransversalTriple::new(p, [(2, 5), (3, 9), (7, 1)])?;
    let cert = complete(&t, &policy)?;
    println!("offsets {:?}", t.offsets());
    println!("normal form: j={}, c={}, e={}", cert.normal_form.j, cert.normal_form.c, cert.normal_form.e);
    println!("method: {:?}", cert.method);
    println!("certificate JSON:\n  {}", serde_json::to_string(&cert).unwrap());
    println!("verifies: {}", verify_certificate(&cert, &t));
    let square = completed_square(&cert)?;
    for (r, c, s) in t.cells() {
        assert!(square.contains(r, c, s));
    }
    println!("all 33 prescribed cells present\n{square}");

    // the trade route
    let t = TransversalTriple::new(p, [(0, 0), (1, 6), (2, 4)])?;
    let cert = complete(&t, &policy)?;
    println!("(0,0),(1,6),(2,4): {:?}", cert.method);

    // the search route: (4, 2, 1) resists every trade under every ordering
    let t = TransversalTriple::new(p, [(0, 0), (1, 4), (2, 1)])?;
    let cert = complete(&t, &policy)?;
    println!("(0,0),(1,4),(2,1): {:?}", cert.method);
    assert!(matches!(cert.method, Method::Search { .. }));
    println!("search row: {}", cert.first_row);
    assert!(verify_certificate(&cert, &t));

    // certificates do not survive tampering
    let mut bent = cert.clone();
    bent.first_row = "0417a529368".into();
    println!("tampered row verifies: {}", verify_certificate(&bent, &t));
    Ok(())
}
