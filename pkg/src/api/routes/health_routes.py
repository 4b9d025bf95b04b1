"""
健康检查路由
"""

from flask import Blueprint, jsonify
from flask_restx import Resource, Namespace

from src import __version__
from src.config.settings import settings

health_bp = Blueprint('health', __name__)
ns = Namespace('health', description='健康检查接口')


def health_payload() -> dict:
    """服务状态：版本、并行上限与目录存储位置"""
    return {
        "status": "ok",
        "service": "p1f",
        "version": __version__,
        "threads": settings.threads,
        "catalogue_dir": str(settings.get_catalogue_path()),
    }


@ns.route('/')
class HealthCheck(Resource):
    @ns.doc('health_check', responses={200: '成功'})
    def get(self):
        return health_payload()


@health_bp.route('/health')
def health_check():
    return jsonify(health_payload())


__all__ = ['health_bp', 'ns']
