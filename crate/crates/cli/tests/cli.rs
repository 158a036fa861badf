use std::process::{Command, Output};

fn heckekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckekit"))
        .args(args)
        .env_remove("HECKEKIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theta_minus_omega() {
    let o = heckekit(&["theta", "--type", "A1", "[-1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(v^-1)*T(t[-1]) + (v^-1 - v)*T(t[1]*s1)\n");

    let o = heckekit(&["theta", "--type", "A1", "--format", "json", "[-1]"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"[{"element":"t[-1]","coeff":"v^-1"},{"element":"t[1]*s1","coeff":"v^-1 - v"}]"#
    );
}

#[test]
fn kl_polynomial_text() {
    let o = heckekit(&["kl", "--type", "A1", "s1", "t[1]*s1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
    let o = heckekit(&["kl", "--type", "A1", "e", "s0*s1"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn whittaker_table_csv_has_seven_rows() {
    let o = heckekit(&["whittaker-table", "--type", "A2", "--format", "csv", "[1,1]"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["lambda", "mu", "kappa_mu", "P_q", "Q_t", "Q_at_1", "freudenthal_mult", "match"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| &r[7] == "true"));
    let zero = rows.iter().find(|r| &r[1] == "[0,0]").unwrap();
    assert_eq!(&zero[4], "t^9 + t^11");
    assert_eq!(&zero[5], "2");
}

#[test]
fn verify_passes_and_is_byte_identical() {
    let args = ["verify", "center", "--type", "A1", "--bound", "4", "--format", "json"];
    let a = heckekit(&args);
    let b = heckekit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    assert!(v.get("duration_ms").is_none());

    let t = heckekit(&["verify", "center", "--type", "A1", "--bound", "4", "--format", "json", "--timing"]);
    let v: serde_json::Value = serde_json::from_slice(&t.stdout).unwrap();
    assert!(v["duration_ms"].is_u64());
}

#[test]
fn verify_examples() {
    for args in [
        ["verify", "euler", "--type", "A2", "--bound", "6"],
        ["verify", "whittaker", "--type", "A1", "--bound", "6"],
        ["verify", "all", "--type", "A1", "--bound", "6"],
    ] {
        let o = heckekit(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "nope"][..],
        &["theta", "[1"],
        &["theta", "--type", "Z9", "[1]"],
        &["center", "--type", "A1", "[-1]"],
        &["theta", "--type", "A2", "[1]"],
        &["theta", "--lattice", "cubic", "[1]"],
        &["kl", "s7", "e"],
        &["masp-act"],
        &[],
    ] {
        assert_eq!(heckekit(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_refusal_exit_3() {
    let o = heckekit(&["verify", "masp", "--budget", "2", "--bound", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());

    let o = Command::new(env!("CARGO_BIN_EXE_heckekit"))
        .args(["verify", "masp", "--bound", "5"])
        .env("HECKEKIT_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    let o = heckekit(&["theta", "--type", "E8", "[0,0,0,0,0,0,0,0]"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn masp_act_forms() {
    let o = heckekit(&["masp-act", "--theta", "[-1]"]);
    assert_eq!(stdout(&o), "(-v)*m(t[1]*s1)\n");
    let o = heckekit(&["masp-act", "s0", "--kl"]);
    assert_eq!(stdout(&o), "(v^-1)*m(e) + (v^-1)*m(t[2]*s1)\n");
    // s1 is not in the anti-spherical quotient: m_e T_s1 = -m_e.
    let o = heckekit(&["masp-act", "s1"]);
    assert_eq!(stdout(&o), "(-1)*m(e)\n");
}

#[test]
fn qweight_root_lattice_coordinates() {
    let o = heckekit(&["qweight", "--type", "A1", "--lattice", "root", "[1]", "[-1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "P_q = 1\nQ_t = t^3\n");
}
