#include "sexakit/units.hpp"
#include "support/error_kind.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace sexakit;
using namespace sexakit::literals;
using sexakit::testing::error_kind;

TEST_CASE("products follow the dimension table") {
  Quantity s = qmul(nindan("0;30"_sx), kus("4;30"_sx));
  CHECK(s == nindan_kus("2;15"_sx));
  CHECK(qmul(kus("4;30"_sx), nindan("0;30"_sx)) == s);

  CHECK(qmul(nindan(45), nindan_kus(32)) == volume_sar("24,0"_sx));
  CHECK(qmul(nindan(3), nindan(4)).dim == Dimension::AreaSar);
  CHECK(qmul(Quantity{12, Dimension::AreaSar}, kus(2)) == volume_sar(24));
  CHECK(qmul(scalar("0;48"_sx), volume_sar(10)) == volume_sar(8));
  CHECK(error_kind([] { qmul(kus(1), kus(1)); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind([] { qmul(volume_sar(1), nindan(1)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("a volume-sar is one nindan by one nindan by one kus") {
  Quantity area = qmul(nindan(1), nindan(1));
  CHECK(qmul(area, kus(1)) == volume_sar(1));
  CHECK(qmul(qmul(nindan(1), kus(1)), nindan(1)) == volume_sar(1));
}

TEST_CASE("quotients invert the products") {
  CHECK(qdiv(volume_sar("24,0"_sx), nindan_kus(32)) == nindan(45));
  CHECK(qdiv(volume_sar("24,0"_sx), nindan(45)) == nindan_kus(32));
  CHECK(qdiv(nindan_kus("2;15"_sx), nindan("0;30"_sx)) == kus("4;30"_sx));
  CHECK(qdiv(volume_sar("1,12,0"_sx), workers("40,0"_sx)) == volume_sar("1;48"_sx));
  CHECK(qdiv(kus(6), kus(2)) == scalar(3));
  CHECK(qdiv(kus(6), scalar("0;30"_sx)) == kus(12));
  CHECK(error_kind([] { qdiv(kus(1), nindan(1)); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind([] { qdiv(kus(1), kus(7)); }) == ErrorKind::IrregularDivisor);
}

TEST_CASE("adding nindan to kus needs a conversion") {
  CHECK(error_kind([] { qadd(nindan(1), kus(1)); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind([] { qsub(kus(1), nindan(1)); }) == ErrorKind::DimensionMismatch);
  CHECK(qadd(nindan_to_kus(nindan(1)), kus(1)) == kus(13));
  CHECK(qadd(nindan(1), kus_to_nindan(kus(6))) == nindan("1;30"_sx));
  CHECK(qsub(nindan(5), nindan(3)) == nindan(2));
  CHECK(error_kind([] { nindan_to_kus(kus(1)); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind([] { require_dim(kus(1), Dimension::LengthNindan, "width"); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("twelve kus to the nindan") {
  CHECK(nindan_to_kus(nindan("0;40"_sx)) == kus(8));
  CHECK(nindan_to_kus(nindan(0)) == kus(0));
  CHECK(nindan_to_kus(nindan(1)) == kus(12));
}

TEST_CASE("nindan and kus conversions round-trip") {
  oracle::Gen gen(0x0417);
  for (int i = 0; i < 1000; ++i) {
    Sexa x = gen.rational();
    REQUIRE(kus_to_nindan(nindan_to_kus(nindan(x))) == nindan(x));
    REQUIRE(nindan_to_kus(nindan(x)).magnitude == x * Sexa(12));
  }
}

TEST_CASE("volume counts") {
  CHECK(sar_to_volume_sar(6, VolumeUnit::Sar60) == volume_sar("6,0,0"_sx));
  CHECK(sar_to_volume_sar(1, VolumeUnit::Susi) == volume_sar(60));
  CHECK(sar_to_volume_sar(2, VolumeUnit::Susi) == volume_sar(120));
  CHECK(sar_to_volume_sar(5, VolumeUnit::VolumeSar) == volume_sar(5));
  CHECK(sar_to_volume_sar(0, VolumeUnit::Sar60) == volume_sar(0));
  CHECK(error_kind([] { sar_to_volume_sar(-1, VolumeUnit::Sar60); }) ==
        ErrorKind::NonPositiveDimension);
}

TEST_CASE("quantity text") {
  CHECK(Quantity::parse("4;30 kus") == kus("4;30"_sx));
  CHECK(Quantity::parse("24,0 volume-sar") == volume_sar(1440));
  CHECK(Quantity::parse("6 sar60") == volume_sar(21600));
  CHECK(Quantity::parse("3 susi") == volume_sar(180));
  CHECK(Quantity::parse("40,0 workers") == workers(2400));
  CHECK(Quantity::parse("2;15 nindan-kus") == nindan_kus("2;15"_sx));
  CHECK(Quantity::parse("0;48") == scalar("0;48"_sx));
  CHECK(Quantity::parse("5 sar").dim == Dimension::AreaSar);
  CHECK(error_kind([] { Quantity::parse("5 cubits"); }) == ErrorKind::UnknownUnit);
  CHECK(error_kind([] { Quantity::parse("5;60 kus"); }) == ErrorKind::MalformedLiteral);

  CHECK(kus("4;30"_sx).to_string() == "4;30 kus");
  CHECK(scalar(3).to_string() == "3 1");
  CHECK(Quantity::parse(scalar(3).to_string()) == scalar(3));
  CHECK(nindan(Sexa(1, 7)).to_string() == "1/7 nindan");
  CHECK(unit_name(Dimension::VolumeSar) == "volume-sar");
}
