// Copyright 2026 The mmcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmcodes/matrix_io.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "mmcodes/errors.h"

using namespace mmcodes;

TEST(Alist, identity_2) {
    EXPECT_EQ(to_alist(BitMatrix::identity(2)), "2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n");
    EXPECT_EQ(from_alist("2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n"), BitMatrix::identity(2));
}

TEST(Alist, layout) {
    // 2 x 3: rows {0,1}, {1,2}.
    BitMatrix m = BitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    EXPECT_EQ(to_alist(m), "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n");
}

TEST(Alist, empty_columns_and_rows) {
    BitMatrix m(2, 3);
    m.set(0, 0);
    std::string text = to_alist(m);
    EXPECT_EQ(from_alist(text), m);
}

TEST(Alist, rejects_inconsistent_input) {
    EXPECT_THROW(from_alist("2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n"), ParseError);
    EXPECT_THROW(from_alist("2 2\n1 1\n"), ParseError);
    EXPECT_THROW(from_alist("2 2\n1 1\n1 1\n1 1\n3\n2\n1\n2\n"), ParseError);
}

TEST(Mtx, identity_2) {
    EXPECT_EQ(to_mtx(BitMatrix::identity(2)),
              "%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 1\n2 2\n");
}

TEST(Mtx, reader_accepts_comments_and_integer_field) {
    BitMatrix m = from_mtx("%%MatrixMarket matrix coordinate integer general\n% comment\n2 3 3\n1 1 1\n2 3 1\n1 2 2\n");
    EXPECT_EQ(m, BitMatrix::from_dense({{1, 0, 0}, {0, 0, 1}}));
    EXPECT_THROW(from_mtx("2 2 1\n1 1\n"), ParseError);
    EXPECT_THROW(from_mtx("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n3 1\n"), ParseError);
}

// 100 random matrices through both formats.
TEST(MatrixIoProperty, round_trip_100_matrices) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; trial++) {
        BitMatrix m = gen::matrix(gen::uniform(rng, 1, 80), gen::uniform(rng, 1, 130), trial % 5 == 0 ? 0.0 : 0.1, rng);
        ASSERT_EQ(from_alist(to_alist(m)), m) << trial;
        ASSERT_EQ(from_mtx(to_mtx(m)), m) << trial;
    }
}

TEST(Files, missing_file_errors) {
    EXPECT_THROW(read_text_file("/nonexistent/dir/file.mtx"), Error);
}
