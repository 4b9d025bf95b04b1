"""
P1F 接口测试
"""

import pytest

from src.data import CYCLIC7_SPEC
from tests.conftest import K4_LINE, K6_LINE, relabel_line


def test_canon(client):
    response = client.post('/api/v1/canon', json={'line': K4_LINE})
    assert response.status_code == 200
    data = response.json
    assert data['success'] is True
    record = data['data']['records'][0]
    assert record['canonical_line'] == K4_LINE
    assert record['aut_order'] == 24
    assert record['aut_cyclic'] is False


def test_namespace_route_matches_blueprint(client):
    direct = client.post('/api/v1/canon', json={'line': K6_LINE})
    documented = client.post('/api/p1f/v1/canon', json={'line': K6_LINE})
    assert documented.status_code == 200
    assert documented.json == direct.json


def test_verify_non_perfect(client, k8_nonperfect):
    from src.core.catalogue import emit_line

    response = client.post('/api/v1/verify', json={'line': emit_line(k8_nonperfect)})
    assert response.status_code == 200
    data = response.json['data']
    assert data['total'] == 1
    assert data['perfect'] == 0
    assert data['reports'][0]['is_partition'] is True


def test_iso(client):
    b = relabel_line(K6_LINE, [3, 5, 0, 1, 4, 2])
    response = client.post('/api/v1/iso', json={'a': K6_LINE, 'b': b})
    assert response.status_code == 200
    assert response.json['data']['isomorphic'] is True

    response = client.post('/api/v1/iso', json={'a': K4_LINE, 'b': K6_LINE})
    assert response.json['data']['isomorphic'] is False


def test_invariants(client, printed_lines):
    response = client.post('/api/v1/invariants',
                           json={'line': printed_lines['rigid_order2_collision'], 'kind': 'indegree'})
    assert response.status_code == 200
    assert response.json['data']['records'][0]['value'] == [598, 748, 332, 102, 18, 2]


def test_invariants_unknown_kind(client):
    response = client.post('/api/v1/invariants', json={'line': K4_LINE, 'kind': 'colour'})
    assert response.status_code == 400
    assert response.json['success'] is False


def test_latin_fold(client):
    response = client.post('/api/v1/latin', json={'line': K4_LINE, 'fold': 3})
    assert response.status_code == 200
    record = response.json['data']['records'][0]
    assert record['square'] == "1 3 2\n3 2 1\n2 1 3"
    assert 'summary' in record


def test_latin_square(client):
    response = client.post('/api/v1/latin', json={'square': "1 2 3\n2 3 1\n3 1 2"})
    assert response.status_code == 200
    data = response.json['data']
    assert data['atomic'] is True
    assert data['hamiltonian_row_pairs'] == 3


def test_develop(client):
    response = client.post('/api/v1/develop', json={'spec': CYCLIC7_SPEC.read_text(encoding='utf-8')})
    assert response.status_code == 200
    data = response.json['data']
    assert data['is_perfect'] is True
    assert data['aut_order'] == 7
    assert data['generator_is_automorphism'] is True


@pytest.mark.parametrize('path, body, message', [
    ('/api/v1/canon', {}, "Missing 'line' parameter"),
    ('/api/v1/iso', {'a': K4_LINE}, "Missing 'b' parameter"),
    ('/api/v1/latin', {'line': K4_LINE}, "Missing 'fold' or 'all_folds' parameter"),
    ('/api/v1/develop', {'spec': '  '}, "Missing 'spec' parameter"),
])
def test_missing_parameters(client, path, body, message):
    response = client.post(path, json=body)
    assert response.status_code == 400
    assert response.json['error'] == message


def test_body_must_be_json_object(client):
    response = client.post('/api/v1/canon', data='abcd', content_type='text/plain')
    assert response.status_code == 400
    assert response.json['error'] == 'Request body must be a JSON object'
    response = client.post('/api/v1/canon', json=['abcd'])
    assert response.status_code == 400


def test_domain_error_is_bad_request(client):
    response = client.post('/api/v1/canon', json={'line': 'abcd acbd'})
    assert response.status_code == 400
    assert response.json['success'] is False
    assert response.json['error']


def test_unknown_endpoint(client):
    response = client.post('/api/v1/colour', json={'line': K4_LINE})
    assert response.status_code == 404


def test_internal_error(client, mocker):
    mocker.patch('src.api.services.p1f_service.canonicalize', side_effect=RuntimeError('boom'))
    response = client.post('/api/v1/canon', json={'line': K4_LINE})
    assert response.status_code == 500
    assert response.json['error'] == 'boom'
