use fullex_ffi::*;
use std::ffi::CStr;
use std::ptr;

fn cube() -> *mut FullexGraph {
    // Outer square 0-3, inner square 4-7, spokes i -> i + 4.
    let rot: [usize; 24] = [1, 4, 3, 2, 5, 0, 3, 6, 1, 0, 7, 2, 0, 5, 7, 1, 6, 4, 2, 7, 5, 3, 4, 6];
    let mut g = ptr::null_mut();
    let s = unsafe { fullex_graph_from_rotation(8, rot.as_ptr(), &mut g) };
    assert_eq!(s, FullexStatus::Ok);
    g
}

#[test]
fn cube_through_the_abi() {
    let g = cube();
    unsafe {
        assert_eq!(fullex_graph_order(g), 8);
        let (mut p4, mut p5, mut p6) = (0, 0, 0);
        assert_eq!(fullex_face_counts(g, &mut p4, &mut p5, &mut p6), FullexStatus::Ok);
        assert_eq!((p4, p5, p6), (6, 0, 0));
        let mut k = 0;
        assert_eq!(fullex_extendability(g, &mut k), FullexStatus::Ok);
        assert_eq!(k, 2);
        let mut ak = 0;
        assert_eq!(fullex_anti_kekule_number(g, &mut ak), FullexStatus::Ok);
        assert_eq!(ak, 4);
        let mut pm = 0;
        assert_eq!(fullex_count_perfect_matchings(g, &mut pm), FullexStatus::Ok);
        assert_eq!(pm, 9);
        let mut layers = 7;
        assert_eq!(fullex_tube_layers(g, &mut layers), FullexStatus::Ok);
        assert_eq!(layers, 0);
        fullex_graph_free(g);
    }
}

#[test]
fn tube_witness_and_canonical_code() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(fullex_tube_new(1, &mut t), FullexStatus::Ok);
        let mut ext = true;
        let mut w = [0usize; 4];
        assert_eq!(fullex_is_k_extendable(t, 2, &mut ext, w.as_mut_ptr()), FullexStatus::Ok);
        assert!(!ext);
        assert_eq!(w, [0, 3, 1, 4]);

        let mut len = 0;
        assert_eq!(fullex_canonical_code(t, ptr::null_mut(), 0, &mut len), FullexStatus::BufferTooSmall);
        let mut buf = vec![0u8; len];
        assert_eq!(fullex_canonical_code(t, buf.as_mut_ptr(), len, &mut len), FullexStatus::Ok);
        assert_eq!(buf[0], 14);

        // Round trip through planar_code bytes.
        let mut bytes = b">>planar_code<<".to_vec();
        bytes.extend_from_slice(&buf);
        let mut u = ptr::null_mut();
        assert_eq!(fullex_graph_from_planar_code(bytes.as_ptr(), bytes.len(), &mut u), FullexStatus::Ok);
        let mut buf2 = vec![0u8; len];
        assert_eq!(fullex_canonical_code(u, buf2.as_mut_ptr(), len, &mut len), FullexStatus::Ok);
        assert_eq!(buf, buf2);
        fullex_graph_free(u);
        fullex_graph_free(t);
    }
}

#[test]
fn errors_are_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fullex_tube_new(0, &mut g), FullexStatus::InvalidInput);
        assert!(g.is_null());
        assert_eq!(fullex_tube_new(1, ptr::null_mut()), FullexStatus::NullPointer);
        let junk = b"not planar code";
        assert_eq!(fullex_graph_from_planar_code(junk.as_ptr(), junk.len(), &mut g), FullexStatus::InvalidInput);
        // K4 is cubic and plane but has triangles.
        let k4: [usize; 12] = [1, 2, 3, 0, 3, 2, 0, 1, 3, 0, 2, 1];
        assert_eq!(fullex_graph_from_rotation(4, k4.as_ptr(), &mut g), FullexStatus::Ok);
        let mut ak = 0;
        assert_eq!(fullex_anti_kekule_number(g, &mut ak), FullexStatus::NotFullerene);
        let mut ext = false;
        assert_eq!(fullex_is_k_extendable(g, 4, &mut ext, ptr::null_mut()), FullexStatus::InvalidInput);
        fullex_graph_free(g);
        fullex_graph_free(ptr::null_mut());
        assert_eq!(fullex_graph_order(ptr::null()), 0);
        let msg = CStr::from_ptr(fullex_status_message(FullexStatus::NotFullerene));
        assert_eq!(msg.to_str().unwrap(), "not a (4,5,6)-fullerene");
        assert!(!CStr::from_ptr(fullex_version()).to_bytes().is_empty());
    }
}
