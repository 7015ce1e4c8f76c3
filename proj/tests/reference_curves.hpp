#pragma once

// Frozen normalized expected-draw values T_max(G^x) / k for the replicated
// binary-to-GF(7) simplex family at dimension k = 4, x = 1..30.  Regenerated
// by the closed-form evaluator and compared to 1e-12; any drift means a
// formula regression, not a data update.

namespace refcurves {

struct Point {
    long q;
    long x;
    const char* normalized;
};

inline constexpr Point kSimplexCurves[] = {
    {2, 1, "1.000000000000000000"},
    {2, 2, "0.939872729394788218"},
    {2, 3, "0.917559523809523809"},
    {2, 4, "0.908960588644092480"},
    {2, 5, "0.906353021978021978"},
    {2, 6, "0.906620697368476052"},
    {2, 7, "0.908325501253132832"},
    {2, 8, "0.910744595442871304"},
    {2, 9, "0.913493915742914598"},
    {2, 10, "0.916362281011671255"},
    {2, 11, "0.919231672932330827"},
    {2, 12, "0.922036328301414691"},
    {2, 13, "0.924740652492668621"},
    {2, 14, "0.927326807927157847"},
    {2, 15, "0.929787515384941855"},
    {2, 16, "0.932121774040610543"},
    {2, 17, "0.934332268373015401"},
    {2, 18, "0.936423775923356971"},
    {2, 19, "0.938402181861208382"},
    {2, 20, "0.940273867992024758"},
    {2, 21, "0.942045336062823955"},
    {2, 22, "0.943722979206358304"},
    {2, 23, "0.945312947684271213"},
    {2, 24, "0.946821074825019054"},
    {2, 25, "0.948252841312434335"},
    {2, 26, "0.949613363712292534"},
    {2, 27, "0.950907398063630778"},
    {2, 28, "0.952139352552386719"},
    {2, 29, "0.953313305365390663"},
    {2, 30, "0.954433025189403206"},
    {3, 1, "1.000000000000000000"},
    {3, 2, "0.967775641632830975"},
    {3, 3, "0.945658081298154192"},
    {3, 4, "0.930022918258212375"},
    {3, 5, "0.918748640265784257"},
    {3, 6, "0.910518944283601975"},
    {3, 7, "0.904478253085064230"},
    {3, 8, "0.900049040014073639"},
    {3, 9, "0.896829121164238968"},
    {3, 10, "0.894531024531024531"},
    {3, 11, "0.892944695106907150"},
    {3, 12, "0.891913734189836397"},
    {3, 13, "0.891319795822838419"},
    {3, 14, "0.891072066334399053"},
    {3, 15, "0.891100005213040487"},
    {3, 16, "0.891348232999775649"},
    {3, 17, "0.891772865261838939"},
    {3, 18, "0.892338840607487081"},
    {3, 19, "0.893017944630847856"},
    {3, 20, "0.893787329192223049"},
    {3, 21, "0.894628389575342474"},
    {3, 22, "0.895525903754492114"},
    {3, 23, "0.896467366034566001"},
    {3, 24, "0.897442466484991019"},
    {3, 25, "0.898442680881705271"},
    {3, 26, "0.899460945224482475"},
    {3, 27, "0.900491395562893818"},
    {3, 28, "0.901529158672015814"},
    {3, 29, "0.902570182625192716"},
    {3, 30, "0.903611098894616155"},
    {4, 1, "1.000000000000000000"},
    {4, 2, "0.983209883742583812"},
    {4, 3, "0.969189454897686623"},
    {4, 4, "0.957384761157243268"},
    {4, 5, "0.947375380878375897"},
    {4, 6, "0.938837219004969490"},
    {4, 7, "0.931516908481376525"},
    {4, 8, "0.925213853441890502"},
    {4, 9, "0.919767409314823107"},
    {4, 10, "0.915047581903932113"},
    {4, 11, "0.910948179251379771"},
    {4, 12, "0.907381700619400911"},
    {4, 13, "0.904275473987219676"},
    {4, 14, "0.901568703195720408"},
    {4, 15, "0.899210186269162080"},
    {4, 16, "0.897156534804725264"},
    {4, 17, "0.895370771542646542"},
    {4, 18, "0.893821216289782952"},
    {4, 19, "0.892480593807224375"},
    {4, 20, "0.891325314085353659"},
    {4, 21, "0.890334887624177553"},
    {4, 22, "0.889491447273820014"},
    {4, 23, "0.888779354804276229"},
    {4, 24, "0.888184875313977939"},
    {4, 25, "0.887695906309248027"},
    {4, 26, "0.887301751114752682"},
    {4, 27, "0.886992928440335339"},
    {4, 28, "0.886761011599734495"},
    {4, 29, "0.886598492173927212"},
    {4, 30, "0.886498663926168070"},
    {5, 1, "1.000000000000000000"},
    {5, 2, "0.990510951365027326"},
    {5, 3, "0.981915429684131862"},
    {5, 4, "0.974108564720504812"},
    {5, 5, "0.967000615138909395"},
    {5, 6, "0.960514405585399500"},
    {5, 7, "0.954583256571997003"},
    {5, 8, "0.949149302123062282"},
    {5, 9, "0.944162114550131804"},
    {5, 10, "0.939577574022639690"},
    {5, 11, "0.935356934425042436"},
    {5, 12, "0.931466047506409943"},
    {5, 13, "0.927874715382373595"},
    {5, 14, "0.924556147657797023"},
    {5, 15, "0.921486504254202461"},
    {5, 16, "0.918644508783514123"},
    {5, 17, "0.916011120258275418"},
    {5, 18, "0.913569253254953132"},
    {5, 19, "0.911303538492158021"},
    {5, 20, "0.909200117256514000"},
    {5, 21, "0.907246464287114875"},
    {5, 22, "0.905431234677667372"},
    {5, 23, "0.903744131121879382"},
    {5, 24, "0.902175788449917623"},
    {5, 25, "0.900717672911068201"},
    {5, 26, "0.899361994072991515"},
    {5, 27, "0.898101627549196151"},
    {5, 28, "0.896930047047815392"},
    {5, 29, "0.895841264467769731"},
    {5, 30, "0.894829776961960745"},
    {7, 1, "1.000000000000000000"},
    {7, 2, "0.996219255314008710"},
    {7, 3, "0.992581919104139518"},
    {7, 4, "0.989081063855459191"},
    {7, 5, "0.985710179474116998"},
    {7, 6, "0.982463143396264807"},
    {7, 7, "0.979334193152545755"},
    {7, 8, "0.976317901162265644"},
    {7, 9, "0.973409151554239835"},
    {7, 10, "0.970603118831666331"},
    {7, 11, "0.967895248216512495"},
    {7, 12, "0.965281237525079594"},
    {7, 13, "0.962757020440854543"},
    {7, 14, "0.960318751063671785"},
    {7, 15, "0.957962789625765223"},
    {7, 16, "0.955685689275644464"},
    {7, 17, "0.953484183840016205"},
    {7, 18, "0.951355176482309350"},
    {7, 19, "0.949295729183855969"},
    {7, 20, "0.947303052980521852"},
    {7, 21, "0.945374498893651573"},
    {7, 22, "0.943507549499665738"},
    {7, 23, "0.941699811087586136"},
    {7, 24, "0.939949006358224318"},
    {7, 25, "0.938252967622800700"},
    {7, 26, "0.936609630462409161"},
    {7, 27, "0.935017027813045656"},
    {7, 28, "0.933473284443913833"},
    {7, 29, "0.931976611799437239"},
    {7, 30, "0.930525303177874376"},
};

inline constexpr int kSimplexCurveCount = sizeof(kSimplexCurves) / sizeof(kSimplexCurves[0]);

}  // namespace refcurves
