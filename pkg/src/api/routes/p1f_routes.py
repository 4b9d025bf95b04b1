"""
P1F 路由模块

本模块把服务层以 JSON 接口暴露，主要功能包括：
1. 校验候选分解 (verify)
2. 规范形与自同构群 (canon)
3. 同构判定 (iso)
4. 不变量 (invariants)
5. 折叠与拉丁方分类 (latin)
6. 发展 (develop)

API 接口说明（均为 POST，请求体为 JSON）：
1. /api/v1/verify      {"line": "..."}
2. /api/v1/canon       {"line": "..."}
3. /api/v1/iso         {"a": "...", "b": "..."}
4. /api/v1/invariants  {"line": "...", "kind": "indegree", "lengths": [3, 4]}
5. /api/v1/latin       {"line": "...", "fold": 3} 或 {"line": "...", "all_folds": true} 或 {"square": "..."}
6. /api/v1/develop     {"spec": "perm: ...\nbase: ...\nfixed: ..."}

响应格式：
    {"success": true/false, "data": {...}, "error": "错误信息"}
领域错误返回 400，其余错误返回 500。

使用示例：
   curl -X POST "http://localhost:9020/api/v1/canon" \
       -H "Content-Type: application/json" \
       -d '{"line": "abcd acbd adbc"}'
"""

from typing import Any, Callable, Dict, Tuple

from flask import Blueprint, jsonify, request
from flask_restx import Namespace, Resource, fields

from src.api.services.base import INTERNAL_ERROR
from src.api.services.invariant_service import InvariantService
from src.api.services.latin_service import LatinService
from src.api.services.p1f_service import P1FService
from src.utils.logging import get_logger

# 创建蓝图
p1f_bp = Blueprint('p1f', __name__)

# 创建命名空间
ns = Namespace('p1f', description='P1F 校验、规范化、不变量与拉丁方接口')

logger = get_logger(__name__)

p1f_service = P1FService()
invariant_service = InvariantService()
latin_service = LatinService()

line_model = ns.model('LineRequest', {
    'line': fields.String(required=True, description='目录行（可含多条记录）'),
})

iso_model = ns.model('IsoRequest', {
    'a': fields.String(required=True, description='第一个目录行'),
    'b': fields.String(required=True, description='第二个目录行'),
})

invariants_model = ns.model('InvariantsRequest', {
    'line': fields.String(required=True, description='目录行'),
    'kind': fields.String(required=True, description='train | indegree | pv | tricolour | cycles | profile | all'),
    'lengths': fields.List(fields.Integer, description='profile 统计的圈长，默认 [3, 4]'),
    'max_i': fields.Integer(description='p 向量的最大下标'),
})

latin_model = ns.model('LatinRequest', {
    'line': fields.String(description='目录行'),
    'fold': fields.Integer(description='折叠的顶点（0 起始）'),
    'all_folds': fields.Boolean(description='折叠全部顶点'),
    'square': fields.String(description='拉丁方文本（与 line 二选一）'),
})

develop_model = ns.model('DevelopRequest', {
    'spec': fields.String(required=True, description='发展规格文本'),
})

result_model = ns.model('Result', {
    'success': fields.Boolean(description='是否成功'),
    'data': fields.Raw(description='处理结果数据'),
    'error': fields.String(description='错误信息'),
})


def _status(result: Dict[str, Any]) -> int:
    if result['success']:
        return 200
    return 500 if result.get('error_type') == INTERNAL_ERROR else 400


def _bad_request(message: str) -> Tuple[Dict[str, Any], int]:
    return {'success': False, 'data': None, 'error': message}, 400


def _require(payload: Dict[str, Any], *keys: str):
    missing = [k for k in keys if not isinstance(payload.get(k), str) or not payload.get(k).strip()]
    if missing:
        return f"Missing '{missing[0]}' parameter"
    return None


def handle_verify(payload: Dict[str, Any]):
    error = _require(payload, 'line')
    if error:
        return _bad_request(error)
    result = p1f_service.verify(payload['line'])
    return result, _status(result)


def handle_canon(payload: Dict[str, Any]):
    error = _require(payload, 'line')
    if error:
        return _bad_request(error)
    result = p1f_service.canon(payload['line'])
    return result, _status(result)


def handle_iso(payload: Dict[str, Any]):
    error = _require(payload, 'a', 'b')
    if error:
        return _bad_request(error)
    result = p1f_service.iso(payload['a'], payload['b'])
    return result, _status(result)


def handle_invariants(payload: Dict[str, Any]):
    error = _require(payload, 'line', 'kind')
    if error:
        return _bad_request(error)
    result = invariant_service.compute(
        payload['line'], payload['kind'],
        lengths=payload.get('lengths') or (3, 4),
        max_i=payload.get('max_i'),
    )
    return result, _status(result)


def handle_latin(payload: Dict[str, Any]):
    if isinstance(payload.get('square'), str):
        result = latin_service.square(payload['square'])
        return result, _status(result)
    error = _require(payload, 'line')
    if error:
        return _bad_request(error)
    fold = payload.get('fold')
    if fold is None and not payload.get('all_folds'):
        return _bad_request("Missing 'fold' or 'all_folds' parameter")
    vertices = None if payload.get('all_folds') else [int(fold)]
    result = latin_service.folds(payload['line'], vertices, check=True)
    return result, _status(result)


def handle_develop(payload: Dict[str, Any]):
    error = _require(payload, 'spec')
    if error:
        return _bad_request(error)
    result = p1f_service.develop(payload['spec'])
    return result, _status(result)


HANDLERS: Dict[str, Callable[[Dict[str, Any]], Tuple[Dict[str, Any], int]]] = {
    'verify': handle_verify,
    'canon': handle_canon,
    'iso': handle_iso,
    'invariants': handle_invariants,
    'latin': handle_latin,
    'develop': handle_develop,
}

MODELS = {
    'verify': line_model,
    'canon': line_model,
    'iso': iso_model,
    'invariants': invariants_model,
    'latin': latin_model,
    'develop': develop_model,
}


def _dispatch(name: str):
    payload = request.get_json(silent=True)
    if not isinstance(payload, dict):
        return _bad_request('Request body must be a JSON object')
    try:
        return HANDLERS[name](payload)
    except Exception as e:
        logger.error(f"{name} 请求处理失败: {str(e)}")
        return {'success': False, 'data': None, 'error': str(e)}, 500


def _make_resource(name: str):
    @ns.doc(f'p1f_{name}', responses={200: ('成功', result_model), 400: '请求参数错误', 500: '服务器错误'})
    @ns.expect(MODELS[name])
    def post(self):
        return _dispatch(name)

    post.__doc__ = f'{name} 接口'
    return type(f'P1F{name.capitalize()}', (Resource,), {'post': post})


for _name in HANDLERS:
    ns.route(f'/v1/{_name}')(_make_resource(_name))


@p1f_bp.route('/api/v1/<name>', methods=['POST'])
def p1f_routes(name: str):
    """与命名空间相同的接口，路径为 /api/v1/<name>"""
    if name not in HANDLERS:
        return jsonify({'success': False, 'data': None, 'error': f'Unknown endpoint: {name}'}), 404
    body, status = _dispatch(name)
    return jsonify(body), status


# 导出命名空间供app.py使用
__all__ = ['p1f_bp', 'ns']
