// Copyright 2026 The tslx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tslx/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <string>

#include "test_util.hpp"
#include "tslx/csv.hpp"
#include "tslx/error.hpp"

namespace tslx {
namespace {

using testing::Slurp;
using testing::TempDir;

std::string Hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
  return out;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected tslx::Error";
  return ErrorCode::kInvalidArgument;
}

std::string MessageOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected tslx::Error";
  return {};
}

TEST(Tslx, OneByOneF64HeaderArithmetic) {
  TempDir dir;
  WriteMatrix(dir / "m.tslx", Matrix(1, 1, {0.0}));
  const auto bytes = Slurp(dir / "m.tslx");
  // 4 magic + 4 version/dtype/reserved + 16 dims + 8 payload.
  ASSERT_EQ(bytes.size(), 32u);
  EXPECT_EQ(Hex(bytes.substr(0, 8)), "54534C5801020000");
  EXPECT_EQ(Hex(bytes.substr(8, 16)), "01000000000000000100000000000000");
  EXPECT_EQ(Hex(bytes.substr(24)), "0000000000000000");
}

TEST(Tslx, F32RampPayloadMatchesIeeeTable) {
  // 0.0f, 1.0f, 2.0f, 3.0f, 4.0f, 5.0f little-endian.
  const Matrix m(2, 3, {0, 1, 2, 3, 4, 5}, DType::kF32);
  const auto enc = EncodeMatrix(m);
  const std::string bytes(enc.begin(), enc.end());
  ASSERT_EQ(bytes.size(), 24u + 6 * 4);
  EXPECT_EQ(Hex(bytes.substr(5, 1)), "01");
  EXPECT_EQ(Hex(bytes.substr(24)),
            "00000000" "0000803F" "00000040" "00004040" "00008040" "0000A040");
}

TEST(Tslx, RoundTripPreservesBitsAndDtype) {
  TempDir dir;
  const Matrix m(2, 2, {0.1, -1e300, 5e-324, 3.0});
  WriteMatrix(dir / "a.tslx", m);
  const Matrix back = ReadMatrix(dir / "a.tslx");
  EXPECT_EQ(back, m);
  EXPECT_EQ(std::memcmp(back.data().data(), m.data().data(), 4 * sizeof(double)), 0);
}

TEST(Tslx, F32WidenedOnLoad) {
  const Matrix m(1, 2, {0.1, 1.0 / 3.0}, DType::kF32);
  const auto enc = EncodeMatrix(m);
  const Matrix back = DecodeMatrix({enc.data(), enc.size()}, "mem");
  EXPECT_EQ(back.dtype(), DType::kF32);
  EXPECT_EQ(back(0, 0), static_cast<double>(0.1f));
  EXPECT_EQ(back(0, 1), static_cast<double>(1.0f / 3.0f));
}

TEST(Tslx, PropertyRoundTripRandomShapes) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = gen.Index(1, 64), c = gen.Index(1, 64);
    const DType dt = trial % 2 ? DType::kF32 : DType::kF64;
    std::vector<double> v(r * c);
    for (double& x : v) {
      x = gen.Uniform(-1e6, 1e6);
      if (dt == DType::kF32) x = static_cast<float>(x);
    }
    const Matrix m(r, c, v, dt);
    const auto enc = EncodeMatrix(m);
    ASSERT_EQ(enc.size(), 24 + r * c * DTypeSize(dt));
    EXPECT_EQ(DecodeMatrix({enc.data(), enc.size()}, "mem"), m);
  }
}

TEST(Tslx, BadMagic) {
  TempDir dir;
  auto enc = EncodeMatrix(Matrix(1, 1, {1.0}));
  std::memcpy(enc.data(), "XXXX", 4);
  WriteFileBytes(dir / "bad.tslx", {enc.data(), enc.size()});
  const auto msg = MessageOf([&] { ReadMatrix(dir / "bad.tslx"); });
  EXPECT_NE(msg.find("bad magic"), std::string::npos) << msg;
  EXPECT_NE(msg.find("bad.tslx"), std::string::npos) << msg;
}

TEST(Tslx, TruncatedPayloadNamesByteCounts) {
  const auto enc = EncodeMatrix(Matrix(2, 2, {1, 2, 3, 4}));
  const std::string bytes(enc.begin(), enc.end() - 5);
  const auto msg = MessageOf([&] { DecodeMatrix(bytes, "t.tslx"); });
  EXPECT_NE(msg.find("truncated payload"), std::string::npos) << msg;
  EXPECT_NE(msg.find("expected 56 bytes, got 51"), std::string::npos) << msg;
}

TEST(Tslx, HeaderFieldErrors) {
  const auto enc = EncodeMatrix(Matrix(1, 1, {1.0}));
  auto with = [&](std::size_t offset, char value) {
    std::string b(enc.begin(), enc.end());
    b[offset] = value;
    return b;
  };
  EXPECT_EQ(CodeOf([&] { DecodeMatrix(with(4, 2), "m"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([&] { DecodeMatrix(with(5, 3), "m"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([&] { DecodeMatrix(with(6, 1), "m"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([&] { DecodeMatrix(with(8, 0), "m"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([&] { DecodeMatrix("TSLX", "m"); }), ErrorCode::kFormat);
  std::string trailing(enc.begin(), enc.end());
  trailing += '\0';
  EXPECT_EQ(CodeOf([&] { DecodeMatrix(trailing, "m"); }), ErrorCode::kFormat);
}

TEST(Tslx, NonFiniteRejectedOnReadAndWrite) {
  auto enc = EncodeMatrix(Matrix(1, 2, {1.0, 2.0}));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::memcpy(enc.data() + 32, &nan, 8);
  const auto msg = MessageOf([&] { DecodeMatrix({enc.data(), enc.size()}, "m"); });
  EXPECT_NE(msg.find("row 0, col 1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("offset 32"), std::string::npos) << msg;
  EXPECT_THROW(Matrix(1, 1, {nan}), Error);
}

TEST(Tslx, F32OverflowRejected) {
  EXPECT_THROW(EncodeMatrix(Matrix(1, 1, {1e300}, DType::kF32)), Error);
}

TEST(Csv, FallbackParsesPlainMatrix) {
  TempDir dir;
  WriteFileBytes(dir / "m.csv", "1,2\n3,4");
  const Matrix m = LoadMatrix(dir / "m.csv");
  EXPECT_EQ(m, Matrix(2, 2, {1, 2, 3, 4}));
}

TEST(Csv, HeaderDetected) {
  const auto r = ParseMatrixCsv("a,b\n1,2", "h.csv");
  EXPECT_EQ(r.matrix, Matrix(1, 2, {1, 2}));
  EXPECT_EQ(r.header, (std::vector<std::string>{"a", "b"}));
}

TEST(Csv, RaggedCitesLine) {
  const auto msg = MessageOf([] { ParseMatrixCsv("1,2\n3", "r.csv"); });
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(Csv, NonNumericCellOutsideHeader) {
  const auto msg = MessageOf([] { ParseMatrixCsv("1,2\n3,x\n", "n.csv"); });
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(Csv, CrLfAccepted) {
  EXPECT_EQ(ParseMatrixCsv("1,2\r\n3,4\r\n", "c").matrix, Matrix(2, 2, {1, 2, 3, 4}));
}

TEST(Csv, ExactDecimalRoundTrip) {
  TempDir dir;
  const Matrix m(2, 2, {0.1, 1.0 / 3.0, -2.5e-300, 123456789.123456789});
  WriteCsv(dir / "m.csv", m, {"x", "y"});
  const auto r = ReadMatrixCsv(dir / "m.csv");
  EXPECT_EQ(r.matrix, m);
  EXPECT_EQ(r.header, (std::vector<std::string>{"x", "y"}));
}

TEST(Csv, QuotedFields) {
  const auto recs = ParseCsvRecords("\"a,\"\"b\",c\n", "q");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].fields, (std::vector<std::string>{"a,\"b", "c"}));
  EXPECT_EQ(FormatCsvRecord({"a,\"b", "c"}), "\"a,\"\"b\",c\n");
}

TEST(Vocab, MarkerTokensVerbatim) {
  const auto v = ParseVocab("\xC4\xA0the\n\xC3\xBF\n", "v.txt");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], "\xC4\xA0the");
  EXPECT_EQ(v[1], "\xC3\xBF");
  EXPECT_EQ(v.Find("\xC3\xBF"), std::optional<std::size_t>(1));
}

TEST(Vocab, EmptyFileRejected) {
  EXPECT_THROW(ParseVocab("", "v.txt"), Error);
}

TEST(Vocab, BlankInteriorLineWarns) {
  Warnings w;
  const auto v = ParseVocab("a\n\nb\n", "v.txt", &w);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], "");
  EXPECT_EQ(w.size(), 1u);
}

TEST(Vocab, InvalidUtf8Rejected) {
  EXPECT_EQ(CodeOf([] { ParseVocab("a\n\xFF\xFE\n", "v.txt"); }), ErrorCode::kFormat);
}

TEST(Vocab, DuplicateTokensFindLowest) {
  const auto v = ParseVocab("x\ny\nx\n", "v");
  EXPECT_EQ(v.Find("x"), std::optional<std::size_t>(0));
  EXPECT_FALSE(v.Find("z"));
}

TEST(Vocab, PairingChecksRowCount) {
  const TokenVocab v({"a", "b"});
  EXPECT_NO_THROW(v.CheckPairing(Matrix(2, 3)));
  EXPECT_THROW(v.CheckPairing(Matrix(3, 3)), Error);
}

TEST(WordGroupsFile, ParsesHeadersAndWords) {
  const auto g = ParseWordGroups("# related\ntrend\n lag \n\n# unrelated\r\nbook\r\n", "w");
  ASSERT_EQ(g.groups.size(), 2u);
  EXPECT_EQ(g.groups[0].name, "related");
  EXPECT_EQ(g.groups[0].words, (std::vector<std::string>{"trend", "lag"}));
  EXPECT_EQ(g.groups[1].name, "unrelated");
  EXPECT_EQ(g.groups[1].words, (std::vector<std::string>{"book"}));
  EXPECT_EQ(g.total_words(), 3u);
}

TEST(WordGroupsFile, WordBeforeHeaderRejected) {
  EXPECT_THROW(ParseWordGroups("trend\n# related\nlag\n", "w"), Error);
}

TEST(Descriptor, RoundTrip) {
  TempDir dir;
  const auto path = DescriptorPath(dir / "emb.tslx");
  EXPECT_EQ(path.filename(), "emb.tslx.meta.json");
  WriteDescriptor(path, {"gpt2", DatasetRole::kVocabEmbeddings, "exporter"});
  const auto d = ReadDescriptor(path);
  EXPECT_EQ(d.name, "gpt2");
  EXPECT_EQ(d.role, DatasetRole::kVocabEmbeddings);
  EXPECT_EQ(d.source, "exporter");
  EXPECT_THROW(ParseDatasetRole("weights"), Error);
}

TEST(MatrixType, ShapeInvariants) {
  EXPECT_THROW(Matrix(0, 3), Error);
  EXPECT_THROW(Matrix(2, 2, {1.0}), Error);
  EXPECT_THROW(Matrix::FromRows({{1, 2}, {3}}), Error);
  const Matrix m(3, 1, {1, 2, 3});
  const std::vector<std::size_t> idx = {2, 0};
  EXPECT_EQ(m.SelectRows(idx), Matrix(2, 1, {3, 1}));
}

}  // namespace
}  // namespace tslx
