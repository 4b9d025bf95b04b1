"""
健康检查接口测试
"""

from src import __version__
from src.config.settings import settings


def test_health_blueprint(client):
    response = client.get('/health')
    assert response.status_code == 200
    data = response.json
    assert data["status"] == "ok"
    assert data["service"] == "p1f"
    assert data["version"] == __version__
    assert data["threads"] == settings.threads


def test_health_namespace_matches_blueprint(client):
    response = client.get('/api/health/')
    assert response.status_code == 200
    assert response.json == client.get('/health').json
