#include "patstat/fixtures.hpp"

#include <random>
#include <set>
#include <unordered_set>

#include "patstat/errors.hpp"

namespace patstat {

namespace {

std::optional<Date> ymd(int y, int m, int d) { return Date::make(y, m, d); }

struct FixtureBuilder {
  PatstatDataset ds;

  void app(ApplnId id, const std::string& auth, const std::string& nr,
           const std::string& kind, std::optional<Date> filed, ApplnId internat = 0) {
    ds.applications.push_back({id, auth, nr, kind, filed, internat});
  }
  void pub(PublnId id, ApplnId appln, const std::string& auth, const std::string& nr,
           const std::string& kind, std::optional<Date> date, bool first_grant = false) {
    ds.publications.push_back({id, appln, auth, nr, kind, date, first_grant});
  }
  void person(PersonId id, std::optional<std::string> ctry) {
    ds.persons.push_back({id, std::move(ctry)});
  }
  void link(PersonId person, ApplnId appln, int invt, int applt) {
    ds.person_appln_links.push_back({person, appln, invt, applt});
  }
  void ipc(ApplnId appln, const std::string& symbol) {
    ds.ipc_assignments.push_back({appln, symbol});
  }
  void prior(ApplnId appln, ApplnId claimed, std::optional<int> seq = 1) {
    ds.priority_claims.push_back({appln, claimed, seq});
  }
  void fam(ApplnId appln, FamilyId family) {
    ds.family_memberships.push_back({appln, family});
  }
  void cite(PublnId citing, PublnId cited) { ds.citations.push_back({citing, cited}); }
};

}  // namespace

PatstatDataset golden_fixture() {
  FixtureBuilder b;

  // ---- wind-turbine cohort of 2005 (IPC F03D, kinds A/W) ----------------
  // The first five members in (appln_auth, appln_id) order are pinned by
  // the golden suite; every other member sorts after AR and above 151176.
  b.app(55286477, "AP", "200603687", "A", ymd(2005, 1, 14));
  b.app(55286499, "AP", "200603713", "A", ymd(2005, 1, 21));
  b.app(532990, "AR", "P050100289", "A", ymd(2005, 1, 26));
  b.app(533082, "AR", "P050100386", "A", ymd(2005, 2, 2));
  b.app(533175, "AR", "P050100493", "A", ymd(2005, 2, 9));

  // five smallest member ids: the heads of the id-ordered result tables
  b.app(65303, "DE", "102005000065", "A", ymd(2005, 3, 4));
  b.app(133780, "DE", "102005000133", "A", ymd(2005, 4, 8));
  b.app(149552, "AT", "A4392005", "A", ymd(2005, 3, 16));
  b.app(151084, "CH", "00452/05", "A", ymd(2005, 3, 18));
  b.app(151176, "SE", "0500612", "A", ymd(2005, 3, 21));

  // inventor-country cases (fractional shares, collaboration counts)
  b.app(263066, "DE", "102005002630", "A", ymd(2005, 5, 10));
  b.app(273390, "CH", "01092/05", "A", ymd(2005, 6, 24));
  b.app(273768, "JP", "2005177737", "A", ymd(2005, 6, 17));
  b.app(273769, "JP", "2005177738", "A", ymd(2005, 6, 17));
  b.app(4975233, "FR", "0550102", "A", ymd(2005, 1, 12));
  b.app(4979189, "US", "11032366", "A", ymd(2005, 1, 10));
  b.app(5804835, "JP", "2005204960", "A", ymd(2005, 7, 13));
  b.app(48145305, "NL", "1028919", "A", ymd(2005, 4, 29));

  // gappy inventor numbering: seq 1 and 3, no 2 (invented)
  b.app(16000001, "IT", "MI20051200", "A", ymd(2005, 6, 23));

  // forward-citation members, published at DE
  b.app(14971868, "DE", "102005014971", "A", ymd(2005, 4, 1));
  b.app(14974947, "DE", "102005014974", "A", ymd(2005, 4, 6));
  b.app(14975309, "DE", "102005014975", "A", ymd(2005, 4, 7));
  b.app(14995919, "DE", "102005014995", "A", ymd(2005, 4, 12));
  b.app(14997816, "DE", "102005014997", "A", ymd(2005, 4, 13));

  // DK-received PCT applications; their national phase entries are below
  b.app(15563101, "DK", "2005000031", "W", ymd(2005, 1, 11));
  b.app(15563116, "DK", "2005000046", "W", ymd(2005, 1, 17));
  b.app(15563118, "DK", "2005000048", "W", ymd(2005, 1, 18));
  b.app(15563246, "DK", "2005000181", "W", ymd(2005, 2, 15));
  b.app(15563258, "DK", "2005000193", "W", ymd(2005, 2, 18));

  // UKIPO members for grant status and publication-number reconstruction
  b.app(21465239, "GB", "0500239.4", "A", ymd(2005, 1, 7));
  b.app(21466952, "GB", "0501547.0", "A", ymd(2005, 1, 26));
  b.app(21467768, "GB", "0502363.1", "A", ymd(2005, 2, 4));
  b.app(21470294, "GB", "0504889.3", "A", ymd(2005, 3, 9));
  b.app(21471154, "GB", "0505749.8", "A", ymd(2005, 3, 21));
  b.app(21471862, "GB", "0506457.7", "A", ymd(2005, 3, 30));

  // ---- cohort IPC assignments -------------------------------------------
  b.ipc(55286477, "F03D   1/00");
  b.ipc(55286499, "F03D  11/04");
  b.ipc(532990, "F03D   7/02");
  b.ipc(533082, "F03D   3/04");
  b.ipc(533175, "F03D   1/06");
  b.ipc(65303, "F03D   1/00");
  b.ipc(65303, "F03D   9/00");  // second symbol: DISTINCT keeps one row
  b.ipc(133780, "F03D   7/04");
  b.ipc(149552, "F03D  11/00");
  b.ipc(151084, "F03D   5/00");
  b.ipc(151176, "F03D   9/02");
  b.ipc(263066, "F03D   1/02");
  b.ipc(273390, "F03D   7/00");
  b.ipc(273768, "F03D   3/00");
  b.ipc(273769, "F03D   3/02");
  b.ipc(4975233, "F03D   5/04");
  b.ipc(4979189, "F03D   1/04");
  b.ipc(5804835, "F03D  11/02");
  b.ipc(48145305, "F03D   7/06");
  b.ipc(16000001, "F03D   9/00");
  b.ipc(14971868, "F03D   1/00");
  b.ipc(14974947, "F03D   7/02");
  b.ipc(14975309, "F03D  11/04");
  b.ipc(14995919, "F03D   1/06");
  b.ipc(14997816, "F03D   9/00");
  b.ipc(15563101, "F03D   1/00");
  b.ipc(15563116, "F03D   7/02");
  b.ipc(15563118, "F03D  11/00");
  b.ipc(15563246, "F03D   1/06");
  b.ipc(15563258, "F03D   9/02");
  b.ipc(21465239, "F03D   1/00");
  b.ipc(21466952, "F03D   7/04");
  b.ipc(21467768, "F03D   3/04");
  b.ipc(21470294, "F03D  11/04");
  b.ipc(21471154, "F03D   5/02");
  b.ipc(21471862, "F03D   9/00");

  // non-members probing the filter edges (invented)
  b.app(800001, "DE", "10200400800", "A", ymd(2004, 6, 15));  // wrong year
  b.ipc(800001, "F03D   1/00");
  b.app(800002, "DE", "10200500802", "T", ymd(2005, 3, 3));  // wrong kind
  b.ipc(800002, "F03D   7/04");
  b.app(800003, "DE", "10200500803", "A", ymd(2005, 5, 5));  // F03B, not F03D
  b.ipc(800003, "F03B  13/00");
  b.app(800004, "DE", "10200500804", "A", std::nullopt);  // unknown filing date
  b.ipc(800004, "F03D   3/00");

  // ---- INPADOC families --------------------------------------------------
  // family 7001: 9 members, publications at DE, EP, US, CN (and one WO)
  b.fam(65303, 7001);
  b.app(900011, "DE", "19904410", "A", ymd(2003, 2, 5));
  b.fam(900011, 7001);
  b.app(900012, "EP", "04765123", "A", ymd(2004, 9, 1));
  b.fam(900012, 7001);
  b.app(900013, "EP", "05108442", "A", ymd(2005, 9, 13));
  b.fam(900013, 7001);
  b.app(900014, "US", "10543210", "A", ymd(2004, 8, 2));
  b.fam(900014, 7001);
  b.app(900015, "US", "11221100", "A", ymd(2005, 9, 8));
  b.fam(900015, 7001);
  b.app(900016, "CN", "200480003211", "A", ymd(2004, 8, 20));
  b.fam(900016, 7001);
  b.app(900017, "DE", "202004019561", "U", ymd(2004, 12, 17));
  b.fam(900017, 7001);
  b.app(900018, "DK", "2004000351", "W", ymd(2004, 10, 28));
  b.fam(900018, 7001);

  b.pub(101001, 65303, "DE", "102005000065", "A1", ymd(2006, 7, 13));
  b.pub(101002, 900011, "DE", "19904410", "A1", ymd(2004, 11, 11));
  b.pub(101003, 900011, "DE", "19904410", "B4", ymd(2007, 3, 1), true);
  b.pub(101004, 900012, "EP", "1704687", "A1", ymd(2006, 9, 27));
  b.pub(101005, 900013, "EP", "1713377", "A1", ymd(2006, 10, 25));
  b.pub(101006, 900014, "US", "2006113118", "A1", ymd(2006, 6, 1));
  b.pub(101007, 900015, "US", "7325772", "B1", ymd(2008, 2, 5), true);
  b.pub(101008, 900016, "CN", "1833097", "A", ymd(2006, 9, 13));
  b.pub(101009, 900017, "DE", "202004019561", "U1", ymd(2005, 4, 21));
  b.pub(101010, 900018, "WO", "2005045243", "A1", ymd(2005, 5, 19));

  // family 7002: 4 members over DE, EP, US, JP
  b.fam(133780, 7002);
  b.app(900021, "EP", "05104033", "A", ymd(2005, 5, 13));
  b.fam(900021, 7002);
  b.app(900022, "US", "11318866", "A", ymd(2005, 12, 28));
  b.fam(900022, 7002);
  b.app(900023, "JP", "2006504422", "A", ymd(2006, 1, 19));
  b.fam(900023, 7002);
  b.pub(102001, 133780, "DE", "102005000133", "A1", ymd(2006, 8, 3));
  b.pub(102002, 900021, "EP", "1725107", "A2", ymd(2006, 11, 29));
  b.pub(102003, 900022, "US", "2007013710", "A1", ymd(2007, 1, 18));
  b.pub(102004, 900023, "JP", "2007501234", "A", ymd(2007, 2, 22));

  // family 7003: 14 members covering 12 offices (plus WO, plus a DE twin)
  b.fam(149552, 7003);
  b.pub(103001, 149552, "AT", "5022005", "A1", ymd(2006, 9, 15));
  const struct {
    ApplnId id;
    const char* auth;
    const char* nr;
    const char* pub_kind;
  } f3[] = {
      {900031, "AU", "2005229102", "A1"}, {900032, "BR", "PI0508991", "A2"},
      {900033, "CA", "2558551", "C"},     {900034, "CN", "200580010133", "A"},
      {900035, "DE", "102004015035", "A1"}, {900036, "DK", "200500411", "A1"},
      {900037, "EP", "1730389", "B1"},    {900038, "ES", "2279670", "A1"},
      {900039, "FI", "20055123", "A1"},   {900040, "FR", "2883934", "A1"},
      {900041, "GB", "2412697", "A"},
  };
  {
    PublnId pid = 103002;
    for (const auto& m : f3) {
      b.app(m.id, m.auth, m.nr, "A", ymd(2005, 3, 16));
      b.fam(m.id, 7003);
      b.pub(pid++, m.id, m.auth, m.nr, m.pub_kind, ymd(2006, 10, 2));
    }
  }
  b.app(900042, "NO", "2005001122", "W", ymd(2005, 3, 16));  // publishes at WO only
  b.fam(900042, 7003);
  b.pub(103013, 900042, "WO", "2005095791", "A1", ymd(2005, 10, 13));
  b.app(900043, "DE", "102005013500", "A", ymd(2005, 3, 24));  // second DE member
  b.fam(900043, 7003);
  b.pub(103014, 900043, "DE", "102005013500", "A1", ymd(2006, 10, 5));

  // family 7004: 13 members covering 11 offices
  b.fam(151084, 7004);
  b.pub(104001, 151084, "CH", "697114", "A5", ymd(2008, 4, 30));
  const struct {
    ApplnId id;
    const char* auth;
    const char* nr;
    const char* pub_kind;
  } f4[] = {
      {900044, "CN", "200580008500", "A"}, {900045, "DE", "102004013131", "A1"},
      {900046, "DK", "200500388", "A1"},   {900047, "EP", "1723456", "A1"},
      {900048, "FR", "2884561", "A1"},     {900049, "GB", "2413043", "A"},
      {900050, "IT", "MI20050455", "A1"},  {900051, "JP", "2007529014", "A"},
      {900052, "KR", "20067021522", "A"},  {900053, "NL", "1028777", "C2"},
  };
  {
    PublnId pid = 104002;
    for (const auto& m : f4) {
      b.app(m.id, m.auth, m.nr, "A", ymd(2005, 3, 18));
      b.fam(m.id, 7004);
      b.pub(pid++, m.id, m.auth, m.nr, m.pub_kind, ymd(2006, 11, 6));
    }
  }
  b.app(900054, "SE", "0500701", "W", ymd(2005, 3, 18));  // WO-published member
  b.fam(900054, 7004);
  b.pub(104012, 900054, "WO", "2005098215", "A1", ymd(2005, 10, 20));
  b.app(900055, "JP", "2007529015", "A", ymd(2005, 3, 25));  // second JP member
  b.fam(900055, 7004);
  b.pub(104013, 900055, "JP", "2007529015", "A", ymd(2007, 1, 11));

  // family 7005: 9 members covering 8 offices
  b.fam(151176, 7005);
  b.pub(105001, 151176, "SE", "0500612", "A", ymd(2006, 9, 22));
  const struct {
    ApplnId id;
    const char* auth;
    const char* nr;
    const char* pub_kind;
  } f5[] = {
      {900061, "US", "10599222", "A1"}, {900062, "DE", "602005001093", "A1"},
      {900063, "EP", "1725804", "A1"},  {900064, "GB", "2424044", "A"},
      {900065, "NO", "2006004233", "A1"}, {900066, "FI", "20065600", "A1"},
      {900067, "DK", "200600988", "A1"},
  };
  {
    PublnId pid = 105002;
    for (const auto& m : f5) {
      b.app(m.id, m.auth, m.nr, "A", ymd(2005, 3, 21));
      b.fam(m.id, 7005);
      b.pub(pid++, m.id, m.auth, m.nr, m.pub_kind, ymd(2006, 12, 4));
    }
  }
  b.app(900068, "DK", "2005000410", "W", ymd(2005, 3, 21));
  b.fam(900068, 7005);
  b.pub(105009, 900068, "WO", "2005100782", "A1", ymd(2005, 10, 27));

  // ---- priority claims ---------------------------------------------------
  // 149552 claims nothing: the only priority filing among the first five
  b.prior(65303, 900011);
  b.prior(133780, 900021);
  b.prior(151084, 900044);
  b.prior(151084, 900045, std::nullopt);  // second claim; result stays one row
  b.prior(151176, 900061);

  // ---- PCT national phase entries ---------------------------------------
  b.app(8300709, "CN", "200580002359", "A", ymd(2006, 8, 1), 15563101);
  b.ipc(8300709, "F03D   1/00");
  b.app(8300756, "CN", "200580002412", "A", ymd(2006, 8, 10), 15563118);
  b.ipc(8300756, "F03D  11/00");
  b.app(8300768, "CN", "200580002433", "A", ymd(2006, 8, 15), 15563116);
  b.ipc(8300768, "F03D   7/02");
  b.app(8306357, "CN", "200580008101", "A", ymd(2006, 9, 20), 15563246);
  b.ipc(8306357, "F03D   1/06");
  b.app(39635652, "JP", "2007502186", "A", ymd(2006, 7, 7), 15563258);
  b.ipc(39635652, "F03D   9/02");
  // a US entry of the same PCT: outside the CN/JP target set
  b.app(8300800, "US", "11571300", "A", ymd(2006, 12, 1), 15563101);

  // WO publications of the DK PCT applications
  b.pub(106001, 15563101, "WO", "2005066363", "A1", ymd(2005, 7, 21));
  b.pub(106002, 15563116, "WO", "2005066395", "A1", ymd(2005, 7, 21));
  b.pub(106003, 15563118, "WO", "2005066401", "A1", ymd(2005, 7, 28));
  b.pub(106004, 15563246, "WO", "2005078277", "A1", ymd(2005, 8, 25));
  b.pub(106005, 15563258, "WO", "2005078289", "A1", ymd(2005, 8, 25));

  // ---- persons and role links -------------------------------------------
  b.person(501, "DE");
  b.person(502, "DE");
  b.person(503, "CH");
  b.person(504, "DE");
  b.person(505, "DE");
  b.person(506, "DE");
  b.person(507, "JP");
  b.person(508, "JP");
  b.person(510, "DE");  // applicant company
  b.person(511, "CH");  // applicant company
  b.person(520, "DE");
  b.person(521, "FR");
  b.person(522, "GB");
  b.person(523, "US");
  b.person(524, "JP");
  b.person(525, "KR");
  b.person(526, std::nullopt);  // residence unknown
  b.person(527, "DE");
  b.person(528, "DK");
  b.person(529, "US");
  b.person(530, "IT");
  b.person(531, "IT");
  b.person(540, "GB");
  b.person(541, std::nullopt);

  // 263066: two German inventors -> DE share 2/2
  b.link(501, 263066, 1, 0);
  b.link(502, 263066, 2, 0);
  b.link(510, 263066, 0, 1);
  // 273390: one Swiss, three German inventors -> CH 1/4, DE 3/4
  b.link(503, 273390, 1, 0);
  b.link(504, 273390, 2, 0);
  b.link(505, 273390, 3, 0);
  b.link(506, 273390, 4, 0);
  b.link(511, 273390, 0, 1);
  // single-inventor members
  b.link(507, 273768, 1, 1);
  b.link(508, 273769, 1, 1);
  // two-country members
  b.link(520, 4975233, 1, 0);
  b.link(521, 4975233, 2, 0);
  b.link(522, 4979189, 1, 0);
  b.link(523, 4979189, 2, 0);
  // two known countries plus an unknown residence
  b.link(524, 5804835, 1, 0);
  b.link(525, 5804835, 2, 0);
  b.link(526, 5804835, 3, 0);
  // three-country member
  b.link(527, 48145305, 1, 0);
  b.link(528, 48145305, 2, 0);
  b.link(529, 48145305, 3, 0);
  // gap in the numbering: rows 2, max seq 3 -> shares sum to 2/3
  b.link(530, 16000001, 1, 0);
  b.link(531, 16000001, 3, 0);
  // GB applicant and an inventor with unknown residence
  b.link(540, 21465239, 0, 1);
  b.link(541, 55286477, 1, 0);
  // person 527 invents on a second application too
  b.link(527, 14995919, 1, 0);

  // ---- UKIPO publications -------------------------------------------------
  b.pub(107001, 21465239, "GB", "0500239.4", "D0", ymd(2005, 2, 9));
  b.pub(107002, 21465239, "GB", "2410379", "B", ymd(2006, 8, 2), true);
  b.pub(107003, 21466952, "GB", "0501547.0", "D0", ymd(2005, 3, 2));
  b.pub(107004, 21467768, "GB", "2423650", "A", ymd(2006, 8, 30));
  b.pub(107005, 21470294, "GB", "2441770", "A", ymd(2008, 3, 19));
  b.pub(107006, 21471154, "GB", "2424926", "A", ymd(2006, 10, 11));
  b.pub(107007, 21471862, "GB", "2425334", "A", ymd(2006, 10, 25));

  // ---- citations ----------------------------------------------------------
  // cited DE publications
  b.pub(108001, 14995919, "DE", "102005019995", "A1", ymd(2005, 9, 14));
  b.pub(108002, 14997816, "DE", "102005019997", "A1", ymd(2005, 7, 20));
  b.pub(108003, 14997816, "DE", "102005019997", "B4", ymd(2007, 9, 1), true);
  b.pub(108004, 14971868, "DE", "102005019971", "A1", ymd(2005, 11, 3));
  b.pub(108005, 14974947, "DE", "102005019974", "A1", ymd(2006, 2, 1));
  b.pub(108006, 14975309, "DE", "102005019975", "A1", ymd(2005, 12, 1));
  b.pub(108007, 14975309, "DE", "102005019975", "C1", ymd(2006, 6, 1));

  // citing publications, one per filler application
  const struct {
    PublnId pid;
    ApplnId aid;
    const char* auth;
    const char* nr;
    int y, m, d;
  } citers[] = {
      {109001, 910001, "EP", "1790101", 2006, 3, 1},
      {109002, 910002, "EP", "1804102", 2006, 11, 15},
      {109003, 910003, "EP", "1830103", 2007, 6, 30},
      {109004, 910004, "EP", "1920104", 2008, 2, 10},
      {109005, 910005, "EP", "1980105", 2008, 9, 14},  // exactly three years on
      {109006, 910006, "EP", "1980106", 2008, 9, 15},  // one day past the window
      {109007, 910007, "US", "2006107107", 2006, 5, 5},
      {109009, 910009, "EP", "1700109", 2006, 1, 10},
      {109010, 910010, "EP", "1900110", 2007, 12, 31},
      {109011, 910011, "EP", "1990111", 2008, 8, 1},
      {109012, 910012, "EP", "1915112", 2008, 1, 15},
      {109013, 910013, "EP", "2050113", 2009, 1, 1},
      {109014, 910014, "EP", "1815114", 2007, 5, 5},
      {109015, 910015, "EP", "2020115", 2008, 11, 30},
  };
  for (const auto& c : citers) {
    b.app(c.aid, c.auth, c.nr, "A", ymd(c.y - 1, 1, 10));
    b.pub(c.pid, c.aid, c.auth, c.nr, "A1", ymd(c.y, c.m, c.d));
  }
  b.app(910008, "EP", "1980108", "A", ymd(2007, 1, 10));
  b.pub(109008, 910008, "EP", "1980108", "A1", std::nullopt);  // date unknown

  // 14995919 receives exactly five EP citations inside its window
  b.cite(109001, 108001);
  b.cite(109002, 108001);
  b.cite(109003, 108001);
  b.cite(109004, 108001);
  b.cite(109005, 108001);  // boundary day counts
  b.cite(109006, 108001);  // too late
  b.cite(109007, 108001);  // wrong citing office
  b.cite(109008, 108001);  // citing date unknown
  // 14997816: two, one through each of its DE publications
  b.cite(109009, 108002);
  b.cite(109010, 108003);
  b.cite(109011, 108002);  // too late
  // 14971868: one
  b.cite(109012, 108004);
  b.cite(109013, 108004);  // too late
  // 14974947: one
  b.cite(109014, 108005);
  // 14975309: one citing publication referencing both DE documents
  b.cite(109015, 108006);
  b.cite(109015, 108007);
  // noise: a US citation of the 65303 family and a non-patent citation
  b.cite(109007, 101001);
  b.cite(108001, 0);

  // a publication outside the families and citation set (invented)
  b.pub(110001, 532990, "AR", "050792", "A1", ymd(2006, 5, 17));

  return b.ds;
}

namespace {

// Deterministic helpers over mt19937_64. Modulo sampling: the slight bias
// is irrelevant here, reproducibility is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t uniform(std::size_t n) { return n == 0 ? 0 : next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(uniform(static_cast<std::size_t>(hi - lo + 1)));
  }
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

void require(bool ok, const char* message) {
  if (!ok) throw InvalidParamsError(message);
}

void validate(const GeneratorParams& p) {
  auto share_ok = [](double s) { return s >= 0.0 && s <= 1.0; };
  require(p.citation_density >= 0.0, "generator: citation_density must be >= 0");
  require(share_ok(p.pct_share), "generator: pct_share must be in [0, 1]");
  require(share_ok(p.missing_date_share), "generator: missing_date_share must be in [0, 1]");
  require(share_ok(p.missing_country_share),
          "generator: missing_country_share must be in [0, 1]");
  require(share_ok(p.sequence_gap_share), "generator: sequence_gap_share must be in [0, 1]");
  require(share_ok(p.family_membership_share),
          "generator: family_membership_share must be in [0, 1]");
  require(share_ok(p.priority_share), "generator: priority_share must be in [0, 1]");
  require(p.family_geometric_p > 0.0 && p.family_geometric_p <= 1.0,
          "generator: family_geometric_p must be in (0, 1]");
  require(p.filing_year_min >= 1800 && p.filing_year_max <= 2200 &&
              p.filing_year_min <= p.filing_year_max,
          "generator: filing year range must lie within [1800, 2200]");
  require(!p.authorities.empty(), "generator: authority alphabet must not be empty");
  for (const auto& a : p.authorities) {
    require(normalize_code(a).size() == 2, "generator: authority codes must be 2 characters");
  }
}

const char* kIpcPool[] = {
    "F03D   1/00", "F03D   7/02", "F03D  11/04", "F03D   9/00", "F03D   5/02",
    "F03D   3/06", "F03B  13/00", "H02J   3/38", "G06F  17/30", "H01L  31/02",
};

}  // namespace

PatstatDataset generate_random_dataset(const GeneratorParams& params) {
  validate(params);

  PatstatDataset ds;
  if (params.n_applications == 0) return ds;

  Rng rng(params.seed);
  const auto& auths = params.authorities;

  // applications
  std::vector<ApplnId> ids;
  ids.reserve(params.n_applications);
  ApplnId next_id = 1000;
  for (std::size_t i = 0; i < params.n_applications; ++i) {
    next_id += 1 + static_cast<ApplnId>(rng.uniform(7));
    ids.push_back(next_id);
  }

  std::vector<ApplnId> pct_ids;
  for (std::size_t i = 0; i < params.n_applications; ++i) {
    Application app;
    app.appln_id = ids[i];
    app.appln_auth = normalize_code(auths[rng.uniform(auths.size())]);
    app.appln_nr = std::to_string(100000 + rng.uniform(900000));
    if (rng.chance(params.pct_share)) {
      app.appln_kind = "W";
      pct_ids.push_back(app.appln_id);
    } else {
      app.appln_kind = rng.chance(0.03) ? "T" : "A";
    }
    if (!rng.chance(params.missing_date_share)) {
      const int year =
          static_cast<int>(rng.range(params.filing_year_min, params.filing_year_max));
      const int month = static_cast<int>(rng.range(1, 12));
      const int day = static_cast<int>(rng.range(1, days_in_month(year, month)));
      app.appln_filing_date = Date::make(year, month, day);
    }
    ds.applications.push_back(std::move(app));
  }
  // national phase links in a second pass, once the PCT population is known
  if (!pct_ids.empty()) {
    for (auto& app : ds.applications) {
      if (app.appln_kind == "A" && rng.chance(0.2)) {
        app.internat_appln_id = pct_ids[rng.uniform(pct_ids.size())];
      }
    }
  }

  // IPC assignments
  for (ApplnId id : ids) {
    const std::size_t n = rng.uniform(params.max_ipc_per_app + 1);
    for (std::size_t k = 0; k < n; ++k) {
      ds.ipc_assignments.push_back({id, kIpcPool[rng.uniform(std::size(kIpcPool))]});
    }
  }

  // publications
  PublnId next_publn = 500000;
  std::vector<PublnId> publn_ids;
  for (std::size_t i = 0; i < params.n_applications; ++i) {
    const Application& app = ds.applications[i];
    const std::size_t n = rng.uniform(params.max_publications_per_app + 1);
    const std::size_t granted = n > 0 && rng.chance(0.4) ? rng.uniform(n) : n;
    for (std::size_t k = 0; k < n; ++k) {
      Publication p;
      next_publn += 1 + static_cast<PublnId>(rng.uniform(5));
      p.pat_publn_id = next_publn;
      p.appln_id = app.appln_id;
      const std::size_t auth_pick = rng.uniform(10);
      if (auth_pick < 7) {
        p.publn_auth = app.appln_kind == "W" ? "WO" : app.appln_auth;
      } else {
        p.publn_auth = normalize_code(auths[rng.uniform(auths.size())]);
      }
      const std::size_t nr_len = 5 + rng.uniform(5);
      p.publn_nr.reserve(nr_len);
      for (std::size_t c = 0; c < nr_len; ++c) {
        p.publn_nr += static_cast<char>('0' + rng.uniform(10));
      }
      const std::size_t kind_pick = rng.uniform(10);
      p.publn_kind = kind_pick < 6 ? "A1" : kind_pick < 8 ? "B1" : kind_pick < 9 ? "D0" : "U1";
      if (!rng.chance(params.missing_date_share)) {
        const std::int64_t base = app.appln_filing_date
                                      ? app.appln_filing_date->day_number()
                                      : Date(/*1970*/).day_number() +
                                            rng.range(10000, 15000);
        p.publn_date = Date::from_day_number(base + rng.range(30, 1400));
      }
      p.publn_first_grant = k == granted;
      publn_ids.push_back(p.pat_publn_id);
      ds.publications.push_back(std::move(p));
    }
  }

  // persons
  std::vector<PersonId> person_ids;
  PersonId next_person = 100000;
  for (std::size_t i = 0; i < params.n_persons; ++i) {
    next_person += 1 + static_cast<PersonId>(rng.uniform(4));
    Person person;
    person.person_id = next_person;
    if (!rng.chance(params.missing_country_share)) {
      person.person_ctry_code = normalize_code(auths[rng.uniform(auths.size())]);
    }
    person_ids.push_back(person.person_id);
    ds.persons.push_back(std::move(person));
  }

  // person-application links with role sequence numbers
  if (!person_ids.empty()) {
    std::vector<PersonId> picked;
    for (ApplnId id : ids) {
      const std::size_t n =
          std::min(rng.uniform(params.max_persons_per_app + 1), person_ids.size());
      picked.clear();
      while (picked.size() < n) {
        const PersonId candidate = person_ids[rng.uniform(person_ids.size())];
        bool seen = false;
        for (PersonId p : picked) seen = seen || p == candidate;
        if (!seen) picked.push_back(candidate);
      }
      int invt_seq = 0;
      int applt_seq = 0;
      for (PersonId person : picked) {
        const std::size_t role = rng.uniform(3);  // 0 inventor, 1 applicant, 2 both
        PersonApplnLink link;
        link.person_id = person;
        link.appln_id = id;
        if (role != 1) {
          invt_seq += 1 + (rng.chance(params.sequence_gap_share)
                               ? static_cast<int>(1 + rng.uniform(2))
                               : 0);
          link.invt_seq_nr = invt_seq;
        }
        if (role != 0) {
          applt_seq += 1 + (rng.chance(params.sequence_gap_share)
                                ? static_cast<int>(1 + rng.uniform(2))
                                : 0);
          link.applt_seq_nr = applt_seq;
        }
        ds.person_appln_links.push_back(link);
      }
    }
  }

  // INPADOC families: contiguous runs with geometric sizes
  FamilyId family_id = 777000;
  std::size_t remaining = 0;
  for (ApplnId id : ids) {
    if (!rng.chance(params.family_membership_share)) continue;
    if (remaining == 0) {
      ++family_id;
      remaining = 1;
      while (remaining < 40 && !rng.chance(params.family_geometric_p)) ++remaining;
    }
    ds.family_memberships.push_back({id, family_id});
    --remaining;
  }

  // priority claims; some applications claim several priorities
  for (ApplnId id : ids) {
    if (ids.size() < 2 || !rng.chance(params.priority_share)) continue;
    const std::size_t n_claims = 1 + (rng.chance(0.3) ? rng.uniform(3) : 0);
    std::vector<ApplnId> claimed;
    for (std::size_t k = 0; k < n_claims; ++k) {
      ApplnId prior = ids[rng.uniform(ids.size())];
      if (prior == id) continue;
      bool seen = false;
      for (ApplnId c : claimed) seen = seen || c == prior;
      if (seen) continue;
      claimed.push_back(prior);
      PriorityClaim claim;
      claim.appln_id = id;
      claim.prior_appln_id = prior;
      if (!rng.chance(0.2)) claim.prior_appln_seq_nr = static_cast<int>(claimed.size());
      ds.priority_claims.push_back(claim);
    }
  }

  // citations; a small share cite non-patent literature (cited id 0)
  if (!publn_ids.empty()) {
    const auto n_citations =
        static_cast<std::size_t>(params.citation_density * static_cast<double>(publn_ids.size()));
    for (std::size_t k = 0; k < n_citations; ++k) {
      Citation c;
      c.pat_publn_id = publn_ids[rng.uniform(publn_ids.size())];
      c.cited_pat_publn_id = rng.chance(0.07) ? 0 : publn_ids[rng.uniform(publn_ids.size())];
      ds.citations.push_back(c);
    }

    // pin a slice of citing dates exactly N years after the cited
    // application's earliest publication, so window-boundary comparisons
    // get exercised on random data as well
    std::map<PublnId, std::size_t> pub_index;
    std::map<ApplnId, std::optional<Date>> earliest;
    for (std::size_t i = 0; i < ds.publications.size(); ++i) {
      const Publication& p = ds.publications[i];
      pub_index.emplace(p.pat_publn_id, i);
      auto& date = earliest[p.appln_id];
      if (p.publn_date && (!date || *p.publn_date < *date)) date = p.publn_date;
    }
    for (const Citation& c : ds.citations) {
      if (c.cited_pat_publn_id == 0 || !rng.chance(0.03)) continue;
      const auto cited_it = pub_index.find(c.cited_pat_publn_id);
      const auto citing_it = pub_index.find(c.pat_publn_id);
      if (cited_it == pub_index.end() || citing_it == pub_index.end()) continue;
      const auto& ref = earliest[ds.publications[cited_it->second].appln_id];
      if (!ref) continue;
      ds.publications[citing_it->second].publn_date =
          ref->add_years(static_cast<int>(rng.uniform(5)));
    }
  }

  return ds;
}

}  // namespace patstat
