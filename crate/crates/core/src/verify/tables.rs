//! Values of `d_l(α_{m,n})` for `l = 1..5` as printed, row `m`, column `n`; `None` is a blank (`α_{m,n} = 0`).

pub struct PrintedTable {
    pub l: u32,
    pub m_max: u32,
    pub n_max: u32,
    pub rows: &'static [&'static [Option<u32>]],
}

pub const PRINTED_TABLES: [PrintedTable; 5] = [
    PrintedTable {
        l: 1,
        m_max: 8,
        n_max: 10,
        rows: &[
            &[
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(4),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(4),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                Some(6),
                Some(4),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                None,
                Some(6),
                Some(4),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                None,
                Some(8),
                Some(6),
                Some(4),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
            ],
        ],
    },
    PrintedTable {
        l: 2,
        m_max: 8,
        n_max: 10,
        rows: &[
            &[
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(3),
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                Some(3),
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                None,
                Some(4),
                Some(3),
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                None,
                Some(4),
                Some(3),
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
            ],
        ],
    },
    PrintedTable {
        l: 3,
        m_max: 8,
        n_max: 13,
        rows: &[
            &[
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(1),
                Some(0),
                Some(1),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(2),
                Some(2),
                Some(0),
                Some(0),
                Some(1),
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(1),
                Some(0),
                Some(1),
                Some(1),
                Some(0),
                None,
            ],
            &[
                None,
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(2),
                Some(0),
                Some(0),
                Some(1),
                Some(0),
                Some(0),
                Some(1),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
            ],
        ],
    },
    PrintedTable {
        l: 4,
        m_max: 8,
        n_max: 15,
        rows: &[
            &[
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(1),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(1),
                Some(1),
                Some(0),
                Some(2),
                Some(1),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(1),
                Some(0),
                Some(2),
                Some(1),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                None,
                Some(2),
                Some(3),
                Some(1),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                Some(1),
                Some(0),
                None,
            ],
            &[
                None,
                None,
                None,
                None,
                Some(2),
                Some(3),
                Some(1),
                Some(1),
                Some(0),
                Some(2),
                Some(1),
                Some(1),
                Some(0),
                Some(2),
                Some(1),
                Some(1),
            ],
        ],
    },
    PrintedTable {
        l: 5,
        m_max: 10,
        n_max: 15,
        rows: &[
            &[
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                Some(1),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                None,
                None,
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(1),
                Some(1),
                Some(0),
                Some(1),
                Some(1),
                Some(1),
                Some(1),
                Some(0),
                None,
                None,
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                Some(1),
                Some(1),
                Some(1),
                Some(0),
                Some(0),
                Some(1),
                Some(1),
                Some(1),
                Some(0),
                Some(0),
                None,
                None,
                None,
            ],
            &[
                None,
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(1),
                Some(0),
                Some(0),
                Some(0),
                Some(1),
                Some(1),
                Some(0),
                Some(0),
                Some(0),
                None,
            ],
            &[
                None,
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                None,
                None,
                Some(2),
                Some(2),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
            ],
            &[
                None,
                None,
                None,
                None,
                None,
                Some(2),
                Some(3),
                Some(2),
                Some(1),
                Some(1),
                Some(0),
                Some(1),
                Some(1),
                Some(1),
                Some(1),
                Some(0),
            ],
        ],
    },
];
